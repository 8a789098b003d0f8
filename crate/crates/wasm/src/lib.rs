//! wasm-bindgen bindings for the browser demo (see `www/`).
//!
//! Three interactive operations are exposed: variety inspection,
//! classification of a (d, n) datum, and the (d, n)-plane SVG with the
//! queried point marked. Results cross the boundary as JSON or SVG
//! strings; errors become JS exceptions carrying the library message.
//! The `imp` layer is plain Rust so it stays testable on native
//! targets, where JS error objects cannot be constructed.

use wasm_bindgen::prelude::*;

mod imp {
    use cicrit::classify::classify;
    use cicrit::plot::{plane_svg, PlotOptions};
    use cicrit::roots::{invariants, DynkinType, VarietyDescriptor};
    use cicrit::search::schneider_table;
    use cicrit::{Error, Result};

    fn descriptor(dynkin: &str, rank: u32, node: u32) -> Result<VarietyDescriptor> {
        VarietyDescriptor::new(DynkinType::parse(dynkin)?, rank, node)
    }

    pub fn variety_json(dynkin: &str, rank: u32, node: u32) -> Result<String> {
        let inv = invariants(&descriptor(dynkin, rank, node)?)?;
        Ok(serde_json::to_string(&inv).expect("invariants serialize"))
    }

    pub fn classify_json(dynkin: &str, rank: u32, node: u32, d: u64, n: u64) -> Result<String> {
        let result = classify(&descriptor(dynkin, rank, node)?, d, n)?;
        Ok(serde_json::to_string(&result).expect("classification serializes"))
    }

    pub fn plane_svg_marked(
        dynkin: &str,
        rank: u32,
        node: u32,
        d: u64,
        n: u64,
        d_max: Option<u64>,
    ) -> Result<String> {
        let opts = PlotOptions {
            d_max,
            mark: Some((d, n)),
            ..PlotOptions::default()
        };
        plane_svg(&descriptor(dynkin, rank, node)?, &opts)
    }

    pub fn deltamin_json(p_max: u32) -> Result<String> {
        if p_max > 40 {
            return Err(Error::InvalidInput("p_max capped at 40 in the demo".into()));
        }
        let table = schneider_table(p_max)?;
        Ok(serde_json::to_string(&table).expect("table serializes"))
    }
}

fn js_err(err: cicrit::Error) -> JsError {
    JsError::new(&err.to_string())
}

/// Invariants of G/P as a JSON object string.
#[wasm_bindgen]
pub fn variety_json(dynkin: &str, rank: u32, node: u32) -> Result<String, JsError> {
    imp::variety_json(dynkin, rank, node).map_err(js_err)
}

/// Full classification result (verdict, region, audit trail) as JSON.
#[wasm_bindgen]
pub fn classify_json(
    dynkin: &str,
    rank: u32,
    node: u32,
    d: u64,
    n: u64,
) -> Result<String, JsError> {
    imp::classify_json(dynkin, rank, node, d, n).map_err(js_err)
}

/// The (d, n)-plane as SVG, with the queried point circled.
#[wasm_bindgen]
pub fn plane_svg_marked(
    dynkin: &str,
    rank: u32,
    node: u32,
    d: u64,
    n: u64,
    d_max: Option<u64>,
) -> Result<String, JsError> {
    imp::plane_svg_marked(dynkin, rank, node, d, n, d_max).map_err(js_err)
}

/// Minimal-discriminant table for p = 1..=p_max as JSON. Capped at
/// p_max = 40 to keep the page responsive.
#[wasm_bindgen]
pub fn deltamin_json(p_max: u32) -> Result<String, JsError> {
    imp::deltamin_json(p_max).map_err(js_err)
}
