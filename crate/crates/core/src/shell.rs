//! Shell-area bound on the average kissing number of a finite ball packing in R³.
//!
//! Around every ball `B` put the concentric sphere `S(B)` of radius `ρ·r(B)`
//! and let `a(B, C)` be the fraction of its area covered by `C`. Disjoint
//! interiors give `Σ_C a(B, C) <= 1` for every `B`, while for every tangent
//! pair `a(B, C) + a(C, B) >= 1 - (3 + ρ²)/(4ρ)` regardless of the radii.
//! Summing both gives `k(P) <= 2 / (1 - (3 + ρ²)/(4ρ))`, which is `8 + 4√3`
//! at the optimal `ρ = √3`.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{euclidean_distance, EuclideanBall};
use crate::grid::BallGrid;
use crate::packing::{NerveGraph, Packing};

/// Slack on per-ball occupancy sums.
pub const OCCUPANCY_TOL: f64 = 1e-9;
/// Slack on pointwise identities.
pub const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellParams {
    rho: f64,
}

impl ShellParams {
    /// `rho` must lie in `(1, 3)`, where the pair-sum constant is positive.
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 1.0 && rho < 3.0) {
            return Err(Error::InvalidInput(format!("rho {rho} outside (1, 3)")));
        }
        Ok(ShellParams { rho })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `1 - (3 + ρ²)/(4ρ)`.
    pub fn pair_sum_constant(&self) -> f64 {
        pair_sum_constant(self.rho)
    }

    /// `2 / (1 - (3 + ρ²)/(4ρ))`.
    pub fn k_bound(&self) -> f64 {
        2.0 / self.pair_sum_constant()
    }
}

impl Default for ShellParams {
    fn default() -> Self {
        ShellParams { rho: 3f64.sqrt() }
    }
}

pub fn pair_sum_constant(rho: f64) -> f64 {
    1.0 - (3.0 + rho * rho) / (4.0 * rho)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapGeometry {
    pub d: f64,
    pub shell_radius: f64,
    pub r: f64,
    /// Cosine of the angular radius of the cap, seen from the shell's center.
    /// `None` when the shell misses the ball or lies inside it.
    pub cos_theta: Option<f64>,
    pub fraction: f64,
}

/// Fraction of the sphere of radius `shell_radius` covered by a ball of
/// radius `r` whose center is at distance `d` from the sphere's center.
pub fn cap_area_fraction(d: f64, shell_radius: f64, r: f64) -> Result<CapGeometry> {
    if !(d > 0.0 && shell_radius > 0.0 && r > 0.0) || !(d.is_finite() && shell_radius.is_finite() && r.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "cap needs positive inputs, got d={d}, shell={shell_radius}, r={r}"
        )));
    }
    let whole = |fraction| CapGeometry {
        d,
        shell_radius,
        r,
        cos_theta: None,
        fraction,
    };
    if d + shell_radius <= r {
        return Ok(whole(1.0));
    }
    if d - r >= shell_radius || d + r <= shell_radius {
        return Ok(whole(0.0));
    }
    // law of cosines in the triangle (shell center, ball center, cap rim)
    let cos_theta = ((d - r) * (d + r) + shell_radius * shell_radius) / (2.0 * d * shell_radius);
    Ok(CapGeometry {
        d,
        shell_radius,
        r,
        cos_theta: Some(cos_theta),
        fraction: 0.5 * (1.0 - cos_theta),
    })
}

fn check_radii(rb: f64, rc: f64) -> Result<()> {
    if !(rb > 0.0 && rc > 0.0 && rb.is_finite() && rc.is_finite()) {
        return Err(Error::InvalidInput(format!("radii must be positive, got {rb}, {rc}")));
    }
    Ok(())
}

/// `½ - (r(B) + ρ² r(B) + 2 r(C)) / (4ρ (r(B) + r(C)))` before clamping.
fn kissing_closed_form(rb: f64, rc: f64, rho: f64) -> f64 {
    0.5 - (rb + rho * rho * rb + 2.0 * rc) / (4.0 * rho * (rb + rc))
}

/// `a(B, C)` for tangent balls, clamped at zero. It vanishes exactly when
/// `r(C) <= (ρ - 1) r(B) / 2`, i.e. when `C` fits inside the shell.
pub fn kissing_pair_fraction(rb: f64, rc: f64, params: &ShellParams) -> Result<f64> {
    check_radii(rb, rc)?;
    Ok(kissing_closed_form(rb, rc, params.rho).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSum {
    /// `a(B, C) + a(C, B)` with clamped fractions.
    pub value: f64,
    /// `1 - (3 + ρ²)/(4ρ)`.
    pub constant: f64,
    /// One of the two fractions was clamped to zero; `value` is then only
    /// bounded below by `constant`.
    pub clamped: bool,
}

pub fn pair_sum(rb: f64, rc: f64, params: &ShellParams) -> Result<PairSum> {
    check_radii(rb, rc)?;
    let ab = kissing_closed_form(rb, rc, params.rho);
    let ac = kissing_closed_form(rc, rb, params.rho);
    Ok(PairSum {
        value: ab.max(0.0) + ac.max(0.0),
        constant: params.pair_sum_constant(),
        clamped: ab <= 0.0 || ac <= 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchInterval {
    pub lo: f64,
    pub hi: f64,
    /// Stop once the bracket is narrower than this.
    pub tol: f64,
}

impl SearchInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        SearchInterval { lo, hi, tol: 1e-10 }
    }
}

/// Maximizes `ρ ↦ 1 - (3 + ρ²)/(4ρ)` by golden-section search. The function
/// is concave on `(1, 3)`.
pub fn optimize_rho(interval: SearchInterval) -> Result<f64> {
    let SearchInterval { mut lo, mut hi, tol } = interval;
    if !(lo < hi) || lo <= 1.0 || hi >= 3.0 || !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "search interval ({lo}, {hi}) must be a nonempty subset of (1, 3)"
        )));
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = pair_sum_constant(x1);
    let mut f2 = pair_sum_constant(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = pair_sum_constant(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = pair_sum_constant(x1);
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellReport {
    pub params: ShellParams,
    /// `Σ_C a(B, C)` over all other balls `C`, per ball `B`.
    pub occupancy: Vec<f64>,
    /// `a(B, C) + a(C, B)` per nerve edge, in edge order.
    pub pair_sums: Vec<((usize, usize), f64)>,
    pub max_occupancy: f64,
    pub min_pair_sum: Option<f64>,
    pub k: Ratio<u64>,
    pub k_real: f64,
    pub k_bound: f64,
    pub pass: bool,
}

type Contribution = (usize, usize, f64, f64);

/// Contributions `(i, j, a(i, j), a(j, i))` for every pair with a possibly
/// nonzero fraction, found from the smaller ball of each pair.
fn shell_contributions(balls: &[EuclideanBall], rho: f64) -> Result<Vec<Contribution>> {
    let grid = BallGrid::new(balls);
    let rows: Vec<Result<Vec<Contribution>>> = (0..balls.len())
        .into_par_iter()
        .map(|i| {
            let b = &balls[i];
            let mut candidates = Vec::new();
            // a(S, L) > 0 needs d < ρ r_S + r_L and a(L, S) > 0 needs
            // d < ρ r_L + r_S; the second is the weaker one when r_S <= r_L.
            grid.for_each_candidate(b.center(), b.radius(), rho, b.radius(), |j| {
                let c = &balls[j];
                if c.radius() > b.radius() || (c.radius() == b.radius() && j > i) {
                    candidates.push(j);
                }
            });
            candidates.sort_unstable();
            let mut out = Vec::new();
            for j in candidates {
                let c = &balls[j];
                let d = euclidean_distance(b.center(), c.center());
                if d >= rho * c.radius() + b.radius() || d == 0.0 {
                    continue;
                }
                let a_bc = cap_area_fraction(d, rho * b.radius(), c.radius())?.fraction;
                let a_cb = cap_area_fraction(d, rho * c.radius(), b.radius())?.fraction;
                if a_bc > 0.0 || a_cb > 0.0 {
                    out.push((i, j, a_bc, a_cb));
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in rows {
        all.extend(r?);
    }
    Ok(all)
}

/// Certifies `k(P) < 2/(1 - (3 + ρ²)/(4ρ))` for an R³ packing with nerve `nerve`.
///
/// Occupancies are computed geometrically over all balls; tangent-pair sums
/// use the kissing closed form, since the nerve declares those pairs tangent.
pub fn shell_certificate(packing: &Packing, nerve: &NerveGraph, params: &ShellParams) -> Result<ShellReport> {
    let balls = packing
        .euclidean()
        .ok_or_else(|| Error::UnsupportedChart("shell certificate needs an r3 packing; project first".into()))?;
    if balls.is_empty() {
        return Err(Error::EmptyPacking);
    }
    if nerve.vertex_count() != balls.len() {
        return Err(Error::InvalidInput("nerve does not match the packing".into()));
    }
    let rho = params.rho();
    let mut occupancy = vec![0.0; balls.len()];
    for (i, j, a_ij, a_ji) in shell_contributions(balls, rho)? {
        occupancy[i] += a_ij;
        occupancy[j] += a_ji;
    }
    let (worst, max_occupancy) =
        occupancy.iter().copied().enumerate().fold(
            (0, f64::NEG_INFINITY),
            |acc, (i, x)| if x > acc.1 { (i, x) } else { acc },
        );
    if max_occupancy > 1.0 + OCCUPANCY_TOL {
        return Err(Error::CertificateFailure(format!(
            "shell of ball {worst} is {max_occupancy} covered"
        )));
    }

    let constant = params.pair_sum_constant();
    let mut pair_sums = Vec::with_capacity(nerve.edge_count());
    let mut sums_ok = true;
    for &(u, w) in nerve.edges() {
        let s = pair_sum(balls[u].radius(), balls[w].radius(), params)?.value;
        sums_ok &= s >= constant - IDENTITY_TOL;
        pair_sums.push(((u, w), s));
    }
    let min_pair_sum = pair_sums.iter().map(|p| p.1).reduce(f64::min);

    let n = balls.len() as u64;
    let m = nerve.edge_count() as u64;
    let k_real = 2.0 * m as f64 / n as f64;
    let k_bound = params.k_bound();
    Ok(ShellReport {
        params: *params,
        occupancy,
        pair_sums,
        max_occupancy,
        min_pair_sum,
        k: Ratio::new(2 * m, n),
        k_real,
        k_bound,
        pass: sums_ok && k_real < k_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::{build_nerve, NerveStrategy};

    const R3: f64 = 1.732_050_807_568_877_2;

    #[test]
    fn cap_examples() {
        let g = cap_area_fraction(2.0, R3, 1.0).unwrap();
        assert!((g.fraction - 0.066_987_298_107_780_68).abs() < 1e-15);
        assert_eq!(cap_area_fraction(0.1, 1.0, 5.0).unwrap().fraction, 1.0);
        assert_eq!(cap_area_fraction(10.0, 1.0, 1.0).unwrap().fraction, 0.0);
        // ball well inside the shell
        assert_eq!(cap_area_fraction(0.5, 3.0, 1.0).unwrap().fraction, 0.0);
        assert!(cap_area_fraction(0.0, 1.0, 1.0).is_err());
        assert!(cap_area_fraction(1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn kissing_examples() {
        let p = ShellParams::default();
        let a = kissing_pair_fraction(1.0, 1.0, &p).unwrap();
        assert!((a - (1.0 - R3 / 2.0) / 2.0).abs() < 1e-15);
        assert!((a - cap_area_fraction(2.0, R3, 1.0).unwrap().fraction).abs() < 1e-15);
        assert_eq!(kissing_pair_fraction(1.0, 0.3, &p).unwrap(), 0.0);
        let limit = 0.5 - 1.0 / (2.0 * R3);
        let big = kissing_pair_fraction(1.0, 1e6, &p).unwrap();
        assert!(big < limit && limit - big < 1e-6);
        assert!(kissing_pair_fraction(1.0, 1e3, &p).unwrap() < big);
        assert!(kissing_pair_fraction(0.0, 1.0, &p).is_err());
    }

    #[test]
    fn zero_threshold() {
        let p = ShellParams::default();
        let edge = (R3 - 1.0) / 2.0;
        assert!(kissing_pair_fraction(1.0, edge * (1.0 + 1e-9), &p).unwrap() > 0.0);
        assert_eq!(kissing_pair_fraction(1.0, edge * (1.0 - 1e-9), &p).unwrap(), 0.0);
    }

    #[test]
    fn pair_sum_examples() {
        let p = ShellParams::default();
        let s = pair_sum(0.7, 1.3, &p).unwrap();
        assert!(!s.clamped);
        assert!((s.value - (1.0 - R3 / 2.0)).abs() < 1e-15);
        let p2 = ShellParams::new(2.0).unwrap();
        assert!((pair_sum(0.7, 1.3, &p2).unwrap().value - 0.125).abs() < 1e-15);
        let near_one = ShellParams::new(1.0 + 1e-8).unwrap();
        // (ρ-1)(3-ρ)/(4ρ) → 0 as ρ → 1
        let c = near_one.pair_sum_constant();
        assert!(c > 0.0 && c < 1e-8);
        let clamped = pair_sum(1.0, 0.1, &p).unwrap();
        assert!(clamped.clamped && clamped.value >= clamped.constant);
        assert!(ShellParams::new(1.0).is_err());
        assert!(ShellParams::new(3.0).is_err());
    }

    #[test]
    fn rho_optimum() {
        let rho = optimize_rho(SearchInterval::new(1.01, 2.99)).unwrap();
        assert!((rho - R3).abs() < 1e-6);
        assert!((pair_sum_constant(rho) - 0.133_974_596_215_561_35).abs() < 1e-9);
        assert!(pair_sum_constant(R3 + 0.1) < pair_sum_constant(R3));
        assert!(pair_sum_constant(R3 - 0.1) < pair_sum_constant(R3));
        assert!(optimize_rho(SearchInterval::new(2.0, 2.0)).is_err());
        assert!(optimize_rho(SearchInterval::new(0.5, 2.0)).is_err());
    }

    #[test]
    fn bound_constant() {
        assert!((ShellParams::default().k_bound() - (8.0 + 4.0 * R3)).abs() < 1e-12);
    }

    #[test]
    fn two_tangent_unit_balls() {
        let p = Packing::r3(vec![
            EuclideanBall::new([0.0; 3], 1.0).unwrap(),
            EuclideanBall::new([2.0, 0.0, 0.0], 1.0).unwrap(),
        ]);
        let g = build_nerve(&p, 1e-9, NerveStrategy::Grid).unwrap();
        let rep = shell_certificate(&p, &g, &ShellParams::default()).unwrap();
        for &o in &rep.occupancy {
            assert!((o - 0.066_987_298_107_780_68).abs() < 1e-15);
        }
        assert_eq!(rep.k, Ratio::from_integer(1));
        assert!(rep.pass);
    }

    #[test]
    fn empty_and_s3_rejected() {
        let p = Packing::r3(vec![]);
        let g = NerveGraph::from_edges(0, []).unwrap();
        assert!(matches!(
            shell_certificate(&p, &g, &ShellParams::default()),
            Err(Error::EmptyPacking)
        ));
    }

    #[test]
    fn overlapping_packing_fails_certificate() {
        // 13 unit balls crowded onto the shell of radius √3 around a unit ball
        let mut balls = vec![EuclideanBall::new([0.0; 3], 1.0).unwrap()];
        for i in 0..40 {
            let t = i as f64 * 0.5;
            balls.push(EuclideanBall::new([2.0 * t.cos(), 2.0 * t.sin(), 0.1 * i as f64 - 2.0], 1.0).unwrap());
        }
        let p = Packing::r3(balls);
        let g = NerveGraph::from_edges(p.len(), []).unwrap();
        assert!(matches!(
            shell_certificate(&p, &g, &ShellParams::default()),
            Err(Error::CertificateFailure(_))
        ));
    }
}
