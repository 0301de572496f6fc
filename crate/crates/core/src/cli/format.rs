//! Decimal output that round-trips every `f64`.

/// Formats `x` with at most 17 significant digits, the shortest string that
/// parses back to the same `f64`. Positional notation is used for decimal
/// exponents in `[-5, 17)`, scientific otherwise. Both zeros print as `0`.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return if x.is_nan() { "NaN".to_owned() } else if x > 0.0 { "inf".to_owned() } else { "-inf".to_owned() };
    }
    // `{:e}` gives the shortest round-tripping mantissa and the exact exponent
    let sci = format!("{x:e}");
    let exponent: i32 = match sci.rsplit_once('e') {
        Some((_, e)) => e.parse().unwrap_or(0),
        None => 0,
    };
    if (-5..17).contains(&exponent) {
        format!("{x}")
    } else {
        sci
    }
}
