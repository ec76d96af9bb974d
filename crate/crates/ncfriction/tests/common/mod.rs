//! Shared brute-force oracles for the integration suites. These sum the
//! defining series directly (explicit terms plus an analytic midpoint
//! integral for the tail) and are kept independent of the closed-form
//! implementation paths they check.

/// Relative deviation |a − b| / |b|.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Interaction-potential factor C(𝒵) from the raw mirror-charge series.
pub fn c_series_oracle(gap: f64, height: f64, terms: u64) -> f64 {
    let u = height / gap;
    let mut sum = 0.0;
    for n in (1..=terms).rev() {
        let nf = n as f64;
        sum += 0.5 * (1.0 / (nf - 1.0 + u) + 1.0 / (nf - u) - 2.0 / nf);
    }
    let m = terms as f64 + 0.5;
    let tail = -0.5 * (((m - 1.0 + u) * (m - u)) / (m * m)).ln();
    (sum + tail) / (2.0 * gap)
}

/// Friction factor D(𝒵) from the raw mirror-charge series.
pub fn d_series_oracle(gap: f64, height: f64, terms: u64) -> f64 {
    let u = height / gap;
    let cube = |x: f64| x * x * x;
    let mut sum = 0.0;
    for n in (1..=terms).rev() {
        let nf = n as f64;
        sum += 1.0 / cube(nf - 1.0 + u) + 1.0 / cube(nf - u) - 2.0 / cube(nf);
    }
    let m = terms as f64 + 0.5;
    let sq = |x: f64| x * x;
    let tail = 0.5 * (1.0 / sq(m - 1.0 + u) + 1.0 / sq(m - u) - 2.0 / sq(m));
    (sum + tail) / cube(gap)
}
