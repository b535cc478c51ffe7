//! Locale-independent number formatting shared by reports and CSV files.

/// Shortest decimal string that round-trips, capped at 12 significant
/// digits. Exact zero of either sign prints as `0`. Never uses exponent
/// notation or a locale-dependent separator, so output files are
/// byte-identical across platforms.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let capped: f64 = format!("{x:.11e}").parse().expect("formatted float reparses");
    capped.to_string()
}
