use std::collections::HashSet;

use super::DynkinType;

/// Cartan matrix in Bourbaki numbering, 0-indexed:
/// `cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
pub(crate) fn cartan_matrix(dynkin: DynkinType, rank: u32) -> Vec<Vec<i64>> {
    let n = rank as usize;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, a: i64, b: i64| {
        m[i][j] = a;
        m[j][i] = b;
    };
    match dynkin {
        DynkinType::A => {
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        DynkinType::B => {
            // alpha_rank is the short root; the double edge sits at the end.
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        DynkinType::C => {
            // alpha_rank is the long root.
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -1, -2);
        }
        DynkinType::D => {
            for i in 0..n - 3 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 2, -1, -1);
            bond(n - 3, n - 1, -1, -1);
        }
        DynkinType::E => {
            // Chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4.
            let chain: &[usize] = match n {
                6 => &[0, 2, 3, 4, 5],
                7 => &[0, 2, 3, 4, 5, 6],
                _ => &[0, 2, 3, 4, 5, 6, 7],
            };
            for w in chain.windows(2) {
                bond(w[0], w[1], -1, -1);
            }
            bond(1, 3, -1, -1);
        }
        DynkinType::F => {
            // 1 - 2 => 3 - 4, alpha_1 and alpha_2 long.
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
        }
        DynkinType::G => {
            // alpha_1 short, alpha_2 long.
            bond(0, 1, -1, -3);
        }
    }
    m
}

/// All positive roots as coefficient vectors over the simple roots,
/// found by the standard closure algorithm: walk up by height, using
/// the root-string relation `q = p - <beta, alpha_j^vee>` to decide
/// whether `beta + alpha_j` is a root.
pub(crate) fn positive_roots_unchecked(dynkin: DynkinType, rank: u32) -> Vec<Vec<u16>> {
    let n = rank as usize;
    let cartan = cartan_matrix(dynkin, rank);
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut frontier: Vec<Vec<u16>> = Vec::new();
    for i in 0..n {
        let mut root = vec![0u16; n];
        root[i] = 1;
        seen.insert(root.clone());
        frontier.push(root);
    }
    while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for beta in &frontier {
            for j in 0..n {
                let pairing: i64 = beta
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| i64::from(c) * cartan[i][j])
                    .sum();
                // p = number of steps down the alpha_j string from beta.
                let mut down = beta.clone();
                let mut p = 0i64;
                loop {
                    if down[j] == 0 {
                        break;
                    }
                    down[j] -= 1;
                    if down.iter().all(|&c| c == 0) || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if seen.insert(up.clone()) {
                        next_frontier.push(up);
                    }
                }
            }
        }
        frontier = next_frontier;
    }
    let mut roots: Vec<Vec<u16>> = seen.into_iter().collect();
    roots.sort();
    roots
}
