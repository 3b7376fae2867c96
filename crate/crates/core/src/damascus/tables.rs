//! Reference data the certificates are checked against, in the crate's
//! polynomial text format (ascending-degree exact fractions).

/// Negated-remainder Sturm chain of 3x⁸+2x⁷−2x⁴−6x³+3, entries f₀…f₈.
/// Reproduced bit-exactly by `SturmChain::build` — no normalization.
pub const TABLE1_CHAIN: [&str; 9] = [
    "3 0 0 -6 -2 0 0 2 3",
    "0 0 -18 -8 0 0 14 24",
    "-3 0 -3/16 11/3 1 0 7/48",
    "-288 -3456/7 0 2304/7 4896/7 1152/7",
    "3137/768 77/48 -1/4 -157/32 -2567/768",
    "-1789231104/6589489 480079872/6589489 -294801408/6589489 2340864000/6589489",
    "-1653961739/129032000000 -146490929959/1032256000000 728975399603/3096768000000",
    "113118741504000000/431253270223963 -1424761021440000000/7331305593807371",
    "-31931834754991359271/142253483234400000000",
];

/// Bracketed numerator of Δ_h for h(y) = (y³−1)/(y⁴+1):
/// y⁸ − 16y⁵ − 22y⁴ + 16y + 9.
pub const DELTA_NUMER_M3N3: &str = "9 16 0 0 -22 -16 0 0 1";

/// Bracketed numerator of Δ_h for h(w) = (w−1)/(w²+1):
/// w⁴ − 4w³ − 6w² + 4w + 1.
pub const DELTA_NUMER_M5N1: &str = "1 4 -6 -4 1";

/// ℓ after the substitution t = √x: 2t⁸+2t⁷+t⁶+t⁵+t⁴−t²−t+1.
pub const ELL_TILDE: &str = "1 -1 -1 0 1 1 1 2 2";

/// Numerator of h′ for h(x) = (x³−1)/(x⁴+1), up to the −x² factor:
/// x⁴ − 4x − 3.
pub const H_CRITICAL_M3N3: &str = "-3 -4 0 0 1";

/// 2x(x²+1)²·d/dx[(x−1)/(x²+1) − ½ln x] = −x⁴−2x³+2x²+2x−1.
pub const NUMER_M5N1: &str = "-1 2 2 -2 -1";
