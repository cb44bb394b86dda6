//! wasm-bindgen entry points for the static demo in `www/`.

use wasm_bindgen::prelude::*;

use projkac::algebra::verify_identity;
use projkac::numerics::fixtures::{first_excited_state, gaussian, ground_state};
use projkac::numerics::{weyl_quantize, wigner_distribution, wigner_recover, Grid2D};

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// Verifies one catalog identity and returns its record as JSON.
#[wasm_bindgen(js_name = verifyIdentity)]
pub fn verify_identity_json(id: &str) -> Result<String, JsError> {
    let v = verify_identity(id).map_err(js_err)?;
    let mut value = serde_json::to_value(&v).map_err(js_err)?;
    value["matches_expectation"] = v.matches_expectation().into();
    Ok(value.to_string())
}

/// Real part of the Wigner function of the ground (`excited = false`) or
/// first excited oscillator state, row-major on an `n × n` grid.
#[wasm_bindgen]
pub fn wigner(n: usize, extent: f64, hbar: f64, excited: bool) -> Result<Vec<f64>, JsError> {
    let g = Grid2D::new(n, extent).map_err(js_err)?;
    let xi = if excited { first_excited_state(g, hbar) } else { ground_state(g, hbar) };
    let w = wigner_distribution(&xi, &xi, hbar).map_err(js_err)?;
    Ok(w.values.iter().map(|v| v.re).collect())
}

/// Relative L² error of quantizing a Gaussian of width `width` centred at
/// `(cx, cy)` and recovering it.
#[wasm_bindgen(js_name = weylRoundTrip)]
pub fn weyl_round_trip(n: usize, extent: f64, nu: f64, cx: f64, cy: f64, width: f64) -> Result<f64, JsError> {
    let g = Grid2D::new(n, extent).map_err(js_err)?;
    let f = gaussian(g, (cx, cy), width);
    wigner_recover(&weyl_quantize(&f, nu), nu).rel_l2_error(&f).map_err(js_err)
}
