//! The 120-ball packing of S³ centered at the 600-cell vertices, the
//! contraction σ, and the layered packings built from them.
//!
//! `P₀` is the 120-ball packing with one ball `B₀` and its antipode removed.
//! `σ(p) = I_S(-p)`, where `S` is centered at `b` (the center of `B₀`) and
//! passes through the 30 kissing points among the 12 balls `R` around `B₀`.
//! `σ(-R) = R`, so consecutive images of `P₀` share one 12-ball layer and
//! `Pₙ = Pₙ₋₁ ∪ σⁿ(P₀)` grows by 106 balls and 666 tangencies per step.

use std::f64::consts::PI;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::geom::{angular_distance, ConformalMapS3, Point4, SphericalBall, SphericalSphere};
use crate::packing::{build_nerve, validate_packing, NerveStrategy, Packing, DEFAULT_RTOL};

/// Golden ratio.
pub const TAU: f64 = 1.618_033_988_749_895;

/// Angular radius of every ball of the 120-ball packing (18°).
pub const D600_RADIUS: f64 = PI / 10.0;

/// Largest depth accepted by [`BuildMode::Direct`].
pub const DIRECT_MAX_DEPTH: usize = 12;

const DOT_TOL: f64 = 1e-12;

/// Relative center distance under which two layer balls are the same ball.
const SHARED_MATCH_RTOL: f64 = 1e-6;

/// `arccos(√((2+τ)/5))`, the angular radius of the sphere `S`.
pub fn s_radius_closed_form() -> f64 {
    ((2.0 + TAU) / 5.0).sqrt().acos()
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if !distinct {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All points obtained from `seed` by sign changes and even coordinate
/// permutations, deduplicated.
fn orbit(seed: [f64; 4]) -> Vec<[f64; 4]> {
    let mut pts: Vec<[f64; 4]> = Vec::new();
    for perm in even_permutations() {
        for signs in 0..16u32 {
            let mut v = [0.0; 4];
            for i in 0..4 {
                let s = if signs & (1 << i) != 0 { -1.0 } else { 1.0 };
                // adding 0.0 turns -0.0 into 0.0
                v[i] = s * seed[perm[i]] + 0.0;
            }
            if !pts.contains(&v) {
                pts.push(v);
            }
        }
    }
    pts
}

/// Orbit sizes of the three generating points, in the order
/// `(1,0,0,0)`, `½(1,1,1,1)`, `½(τ,1,1/τ,0)`.
pub fn d600_orbit_sizes() -> [usize; 3] {
    let [a, b, c] = d600_seeds();
    [orbit(a).len(), orbit(b).len(), orbit(c).len()]
}

fn d600_seeds() -> [[f64; 4]; 3] {
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.5, 0.5, 0.5, 0.5],
        [0.5 * TAU, 0.5, 0.5 / TAU, 0.0],
    ]
}

/// The 120 congruent balls of radius 18° centered at the 600-cell vertices,
/// in lexicographic order of their coordinates.
pub fn build_d600() -> Packing {
    let mut centers: Vec<[f64; 4]> = d600_seeds().into_iter().flat_map(orbit).collect();
    centers.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let balls = centers
        .into_iter()
        .map(|c| {
            let p = Point4::new(c).expect("orbit points lie on S³");
            SphericalBall::new(p, D600_RADIUS).expect("18° is a valid radius")
        })
        .collect();
    Packing::s3(balls)
}

/// Index of the ball centered at `(1,0,0,0)`.
pub fn default_b0_index(d: &Packing) -> Option<usize> {
    let balls = d.spherical()?;
    balls.iter().position(|b| b.center().coords() == [1.0, 0.0, 0.0, 0.0])
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub ball_count: usize,
    pub tangency_count: usize,
    /// Neighbors per ball (the same for every ball).
    pub neighbors_per_ball: usize,
    /// Tangencies among the neighbors of one ball (the same for every ball).
    pub mutual_tangencies: usize,
    /// Largest `|q·c - τ/2|` over tangent pairs.
    pub max_tangent_dot_error: f64,
    /// Smallest center distance between non-tangent balls, radians.
    pub min_non_kissing_distance: f64,
    /// Largest distance from `-c` to the nearest center, over all centers.
    pub max_antipode_error: f64,
}

fn fail(check: &str) -> Error {
    Error::PropertyViolation(check.to_string())
}

/// Checks the combinatorics the construction relies on: 12 neighbors per
/// ball at 36°, icosahedral neighbor sets (30 mutual tangencies, each
/// neighbor touching 5 others), next-nearest centers at 60°, and closure
/// under the antipodal map.
pub fn verify_d600_properties(d: &Packing) -> Result<PropertyReport> {
    let balls = d
        .spherical()
        .ok_or_else(|| Error::UnsupportedChart("expected an s3 packing".into()))?;
    let nerve = build_nerve(d, DEFAULT_RTOL, NerveStrategy::AllPairs)?;
    let half_tau = 0.5 * TAU;
    let mut max_dot_err = 0.0_f64;
    let mut min_far = f64::INFINITY;
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            let dot = balls[i].center().dot(balls[j].center());
            if nerve.has_edge(i, j) {
                max_dot_err = max_dot_err.max((dot - half_tau).abs());
            } else {
                min_far = min_far.min(angular_distance(balls[i].center(), balls[j].center()));
            }
        }
    }
    if max_dot_err > DOT_TOL {
        return Err(fail(&format!(
            "tangent centers not 36° apart (dot error {max_dot_err:e})"
        )));
    }
    if (min_far - PI / 3.0).abs() > DOT_TOL {
        return Err(fail(&format!(
            "next-nearest centers at {}° instead of 60°",
            min_far.to_degrees()
        )));
    }
    let mut mutual = None;
    for v in 0..balls.len() {
        let nb = nerve.neighbors(v);
        if nb.len() != 12 {
            return Err(fail(&format!("ball {v} has {} neighbors", nb.len())));
        }
        let mut count = 0;
        for &a in nb {
            let deg = nb.iter().filter(|&&b| nerve.has_edge(a, b)).count();
            if deg != 5 {
                return Err(fail(&format!("neighbor {a} of ball {v} touches {deg} other neighbors")));
            }
            count += deg;
        }
        let count = count / 2;
        if count != 30 {
            return Err(fail(&format!("ball {v}: {count} mutual tangencies among neighbors")));
        }
        mutual = Some(count);
    }
    let mut max_anti = 0.0_f64;
    for b in balls {
        let anti = b.center().antipode();
        let nearest = balls
            .iter()
            .map(|c| angular_distance(&anti, c.center()))
            .fold(f64::INFINITY, f64::min);
        max_anti = max_anti.max(nearest);
    }
    if max_anti > DOT_TOL {
        return Err(fail("packing is not self-antipodal"));
    }
    Ok(PropertyReport {
        ball_count: balls.len(),
        tangency_count: nerve.edge_count(),
        neighbors_per_ball: 12,
        mutual_tangencies: mutual.unwrap_or(0),
        max_tangent_dot_error: max_dot_err,
        min_non_kissing_distance: min_far,
        max_antipode_error: max_anti,
    })
}

/// Role of a ball of `P₀` relative to `B₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Kisses `B₀`.
    R,
    /// Kisses `-B₀`.
    NegR,
    /// Everything else.
    Q,
}

impl Role {
    fn tag(self) -> &'static str {
        match self {
            Role::R => "R",
            Role::NegR => "-R",
            Role::Q => "Q",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SeedData {
    pub d: Packing,
    pub b0_index: usize,
    pub neg_b0_index: usize,
    /// Center of `B₀`.
    pub b: Point4,
    /// The 12 balls kissing `B₀`.
    pub r_indices: Vec<usize>,
    pub s: SphericalSphere,
    /// `p ↦ I_S(-p)`.
    pub sigma: ConformalMapS3,
    pub s_radius_closed_form: f64,
    /// Angle from `b` to the kissing point of two tangent `R` balls.
    pub s_radius_measured: f64,
}

impl SeedData {
    /// `P₀ = D ∖ {B₀, -B₀}` with the role of each ball, in `D` order.
    pub fn p0(&self) -> Vec<(SphericalBall, Role)> {
        let balls = self.d.spherical().expect("seed packing is s3");
        let b0 = &balls[self.b0_index];
        let nb0 = &balls[self.neg_b0_index];
        balls
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.b0_index && i != self.neg_b0_index)
            .map(|(_, ball)| {
                let role = if (ball.center().dot(b0.center()) - 0.5 * TAU).abs() < 1e-9 {
                    Role::R
                } else if (ball.center().dot(nb0.center()) - 0.5 * TAU).abs() < 1e-9 {
                    Role::NegR
                } else {
                    Role::Q
                };
                (*ball, role)
            })
            .collect()
    }
}

/// Locates `B₀`, its antipode and its 12 neighbors, and builds `S` and σ.
/// The radius of `S` is obtained both from the closed form and from an
/// actual kissing point, and the two must agree to 1e-12.
pub fn build_sigma(d: Packing, b0_index: usize) -> Result<SeedData> {
    let balls = d
        .spherical()
        .ok_or_else(|| Error::UnsupportedChart("expected an s3 packing".into()))?;
    let b0 = balls
        .get(b0_index)
        .ok_or_else(|| Error::InvalidInput(format!("b0 index {b0_index} out of range")))?;
    let b = *b0.center();
    let anti = b.antipode();
    let neg_b0_index = balls
        .iter()
        .position(|c| angular_distance(c.center(), &anti) < 1e-12)
        .ok_or_else(|| Error::ConstructionInconsistency("no antipodal ball for B₀".into()))?;
    let r_indices: Vec<usize> = balls
        .iter()
        .enumerate()
        .filter(|(i, c)| *i != b0_index && (c.center().dot(&b) - 0.5 * TAU).abs() < 1e-9)
        .map(|(i, _)| i)
        .collect();
    if r_indices.len() != 12 {
        return Err(Error::ConstructionInconsistency(format!(
            "B₀ has {} kissing balls",
            r_indices.len()
        )));
    }

    let (i1, i2) = r_indices
        .iter()
        .flat_map(|&i| r_indices.iter().map(move |&j| (i, j)))
        .find(|&(i, j)| i < j && (balls[i].center().dot(balls[j].center()) - 0.5 * TAU).abs() < 1e-9)
        .ok_or_else(|| Error::ConstructionInconsistency("no tangent pair in R".into()))?;
    let c1 = balls[i1].center().coords();
    let c2 = balls[i2].center().coords();
    let kiss = Point4::normalized([c1[0] + c2[0], c1[1] + c2[1], c1[2] + c2[2], c1[3] + c2[3]])?;
    let measured = angular_distance(&b, &kiss);
    let closed = s_radius_closed_form();
    if (measured - closed).abs() > 1e-12 {
        return Err(Error::ConstructionInconsistency(format!(
            "S radius {closed} (closed form) vs {measured} (kissing point)"
        )));
    }
    let s = SphericalSphere::new(b, closed)?;
    Ok(SeedData {
        d,
        b0_index,
        neg_b0_index,
        b,
        r_indices,
        s,
        sigma: ConformalMapS3::antipode_then_invert(s),
        s_radius_closed_form: closed,
        s_radius_measured: measured,
    })
}

/// The default seed: the 120-ball packing with `B₀` centered at `(1,0,0,0)`.
pub fn default_seed() -> Result<SeedData> {
    let d = build_d600();
    let b0 = default_b0_index(&d).expect("(1,0,0,0) is a vertex");
    build_sigma(d, b0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Build every layer and check the whole packing numerically.
    Direct,
    /// Check one window `P₀ ∪ σ(P₀)` numerically and extend the counts by
    /// the per-step increments measured on it.
    Windowed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerTally {
    pub n: usize,
    pub ball_count: u64,
    pub tangency_count: u64,
    /// `2·tangency_count / ball_count`, reduced.
    pub k: Ratio<u64>,
}

impl LayerTally {
    fn new(n: usize, ball_count: u64, tangency_count: u64) -> Self {
        LayerTally {
            n,
            ball_count,
            tangency_count,
            k: Ratio::new(2 * tangency_count, ball_count),
        }
    }
}

/// One layer `σᵐ(P₀)`, ball for ball aligned with `P₀`.
struct Layer {
    balls: Vec<SphericalBall>,
}

/// Pairs each `σᵐ(-R)` ball with the nearest `σᵐ⁻¹(R)` ball and returns the
/// largest center distance relative to the radius.
fn match_shared_layer(prev: &Layer, next: &Layer, roles: &[Role]) -> Result<f64> {
    let prev_r: Vec<&SphericalBall> = prev
        .balls
        .iter()
        .zip(roles)
        .filter(|(_, r)| **r == Role::R)
        .map(|(b, _)| b)
        .collect();
    let mut used = vec![false; prev_r.len()];
    let mut worst = 0.0_f64;
    for (ball, _) in next.balls.iter().zip(roles).filter(|(_, r)| **r == Role::NegR) {
        let (j, dist) = prev_r
            .iter()
            .enumerate()
            .map(|(j, c)| (j, angular_distance(ball.center(), c.center())))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or_else(|| Error::Layering("empty shared layer".into()))?;
        let rel = dist.max((ball.radius() - prev_r[j].radius()).abs()) / ball.radius();
        if rel > SHARED_MATCH_RTOL || used[j] {
            return Err(Error::Layering(format!(
                "σ(-R) ball does not match an R ball of the previous layer (relative offset {rel:e})"
            )));
        }
        used[j] = true;
        worst = worst.max(rel);
    }
    if used.iter().any(|u| !u) {
        return Err(Error::Layering("shared layer is not a bijection".into()));
    }
    Ok(worst)
}

/// Layers `P₀, σ(P₀), …, σⁿ(P₀)` and the assembled packing with labels
/// `L<m>:<role>`; shared balls are kept once, in the older layer.
fn assemble_layers(seed: &SeedData, n: usize) -> Result<Packing> {
    let p0 = seed.p0();
    let roles: Vec<Role> = p0.iter().map(|(_, r)| *r).collect();
    let mut layer = Layer {
        balls: p0.iter().map(|(b, _)| *b).collect(),
    };
    let mut balls = layer.balls.clone();
    let mut labels: Vec<String> = roles.iter().map(|r| format!("L0:{}", r.tag())).collect();
    for m in 1..=n {
        let next = Layer {
            balls: layer.balls.iter().map(|b| seed.sigma.apply_ball(b)).collect(),
        };
        match_shared_layer(&layer, &next, &roles)?;
        for (b, r) in next.balls.iter().zip(&roles) {
            if *r != Role::NegR {
                balls.push(*b);
                labels.push(format!("L{m}:{}", r.tag()));
            }
        }
        layer = next;
    }
    Packing::s3(balls).with_labels(labels)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceReport {
    /// Balls of `σ(-R)` matched to balls of `R`.
    pub shared_matches: usize,
    /// Largest center distance (radians) in that matching.
    pub max_shared_mismatch: f64,
    /// Size of `Q = P₀ ∖ (R ∪ -R)`.
    pub q_count: usize,
    /// Smallest distance between a `Q` ball and either `S` or `-S`, radians.
    pub q_min_clearance: f64,
    pub base_balls: u64,
    pub base_tangencies: u64,
    pub window_balls: u64,
    pub window_tangencies: u64,
    /// Tangencies in the window between a ball of `P₀ ∖ R` and a ball of `σ(P₀) ∖ R`.
    pub cross_layer_tangencies: usize,
}

impl InterfaceReport {
    pub fn ball_increment(&self) -> u64 {
        self.window_balls - self.base_balls
    }

    pub fn tangency_increment(&self) -> u64 {
        self.window_tangencies - self.base_tangencies
    }
}

/// Verifies the window `P₀ ∪ σ(P₀)`: it is a packing, `σ(-R)` coincides
/// with `R`, and `Q` lies strictly between `-S` and `S`. Since σ is
/// conformal, every later window `σⁿ(P₀) ∪ σⁿ⁺¹(P₀)` is congruent to this one.
pub fn verify_layer_interface(seed: &SeedData) -> Result<InterfaceReport> {
    let p0 = seed.p0();
    let roles: Vec<Role> = p0.iter().map(|(_, r)| *r).collect();
    let base = Packing::s3(p0.iter().map(|(b, _)| *b).collect());
    let base_nerve =
        build_nerve(&base, DEFAULT_RTOL, NerveStrategy::AllPairs).map_err(|e| Error::Layering(format!("P₀: {e}")))?;

    let layer0 = Layer {
        balls: p0.iter().map(|(b, _)| *b).collect(),
    };
    let layer1 = Layer {
        balls: layer0.balls.iter().map(|b| seed.sigma.apply_ball(b)).collect(),
    };
    let rel = match_shared_layer(&layer0, &layer1, &roles)?;
    let max_shared_mismatch = rel * D600_RADIUS;
    if max_shared_mismatch > 1e-9 {
        return Err(Error::Layering(format!(
            "σ(-R) differs from R by {max_shared_mismatch:e} rad"
        )));
    }

    let window = assemble_layers(seed, 1)?;
    let report = validate_packing(&window, DEFAULT_RTOL);
    if !report.ok {
        let (i, j) = report.pair.unwrap_or_default();
        return Err(Error::Layering(format!(
            "window balls {} and {} overlap (gap {:e})",
            window.label(i).unwrap_or("?"),
            window.label(j).unwrap_or("?"),
            report.min_gap.unwrap_or(f64::NAN)
        )));
    }
    let window_nerve = build_nerve(&window, DEFAULT_RTOL, NerveStrategy::AllPairs)
        .map_err(|e| Error::Layering(format!("window: {e}")))?;
    let labels = window.labels().unwrap_or(&[]);
    let old_non_r = |i: usize| labels[i].starts_with("L0:") && labels[i] != "L0:R";
    let new_ball = |i: usize| labels[i].starts_with("L1:");
    let cross_layer_tangencies = window_nerve
        .edges()
        .iter()
        .filter(|&&(u, w)| (old_non_r(u) && new_ball(w)) || (old_non_r(w) && new_ball(u)))
        .count();
    if cross_layer_tangencies != 0 {
        return Err(Error::Layering(format!(
            "{cross_layer_tangencies} contacts between P₀ ∖ R and σ(P₀) ∖ R"
        )));
    }

    let alpha = seed.s.radius();
    let mut q_count = 0;
    let mut q_min_clearance = f64::INFINITY;
    for (ball, role) in &p0 {
        if *role != Role::Q {
            continue;
        }
        q_count += 1;
        let d = angular_distance(&seed.b, ball.center());
        let inner = d - ball.radius() - alpha;
        let outer = (PI - alpha) - (d + ball.radius());
        q_min_clearance = q_min_clearance.min(inner).min(outer);
    }
    if !(q_min_clearance > 0.0) {
        return Err(Error::Layering(format!(
            "Q is not strictly between -S and S (clearance {q_min_clearance})"
        )));
    }

    Ok(InterfaceReport {
        shared_matches: seed.r_indices.len(),
        max_shared_mismatch,
        q_count,
        q_min_clearance,
        base_balls: base.len() as u64,
        base_tangencies: base_nerve.edge_count() as u64,
        window_balls: window.len() as u64,
        window_tangencies: window_nerve.edge_count() as u64,
        cross_layer_tangencies,
    })
}

/// Tallies for `P₀ … Pₙ` from the counts of `P₀` and the per-step
/// increments of the verified window.
pub fn layer_tallies(seed: &SeedData, n: usize) -> Result<Vec<LayerTally>> {
    let w = verify_layer_interface(seed)?;
    Ok(tallies_from_window(&w, n))
}

fn tallies_from_window(w: &InterfaceReport, n: usize) -> Vec<LayerTally> {
    (0..=n)
        .map(|m| {
            let m64 = m as u64;
            LayerTally::new(
                m,
                w.base_balls + m64 * w.ball_increment(),
                w.base_tangencies + m64 * w.tangency_increment(),
            )
        })
        .collect()
}

/// Builds `Pₙ` and the tallies of `P₀ … Pₙ`.
///
/// In direct mode (`n <= 12`) the whole packing is validated and its nerve
/// counted; the count must equal the tally.
pub fn build_pn(seed: &SeedData, n: usize, mode: BuildMode) -> Result<(Packing, Vec<LayerTally>)> {
    if mode == BuildMode::Direct && n > DIRECT_MAX_DEPTH {
        return Err(Error::InvalidInput(format!(
            "direct mode supports n <= {DIRECT_MAX_DEPTH}, got {n}"
        )));
    }
    let window = verify_layer_interface(seed)?;
    let tallies = tallies_from_window(&window, n);
    let packing = assemble_layers(seed, n)?;
    let last = tallies[n];
    if packing.len() as u64 != last.ball_count {
        return Err(Error::Layering(format!(
            "P_{n} has {} balls, tally says {}",
            packing.len(),
            last.ball_count
        )));
    }
    if mode == BuildMode::Direct {
        let report = validate_packing(&packing, DEFAULT_RTOL);
        if !report.ok {
            let (i, j) = report.pair.unwrap_or_default();
            return Err(Error::Layering(format!(
                "balls {} and {} overlap (gap {:e})",
                packing.label(i).unwrap_or("?"),
                packing.label(j).unwrap_or("?"),
                report.min_gap.unwrap_or(f64::NAN)
            )));
        }
        let nerve = build_nerve(&packing, DEFAULT_RTOL, NerveStrategy::AllPairs)?;
        if nerve.edge_count() as u64 != last.tangency_count {
            return Err(Error::Layering(format!(
                "P_{n} has {} tangencies, tally says {}",
                nerve.edge_count(),
                last.tangency_count
            )));
        }
    }
    Ok((packing, tallies))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimReport {
    /// Smallest distance from `b` to a center in `P₀ ∖ R`.
    pub min_center_distance: f64,
    /// Smallest distance from `b` to a point of a ball in `P₀ ∖ R`.
    pub min_nearest_point_distance: f64,
    pub s_radius: f64,
    /// `min_nearest_point_distance - s_radius`.
    pub slack: f64,
}

/// Checks that `S` stays clear of every ball of `P₀ ∖ R`: their centers are
/// at least 60° from `b` and their nearest points at least 42°.
pub fn verify_separation_claim(seed: &SeedData) -> Result<ClaimReport> {
    let mut min_center = f64::INFINITY;
    let mut min_near = f64::INFINITY;
    for (ball, role) in seed.p0() {
        if role == Role::R {
            continue;
        }
        let d = angular_distance(&seed.b, ball.center());
        min_center = min_center.min(d);
        min_near = min_near.min(d - ball.radius());
    }
    let sixty = PI / 3.0;
    let forty_two = 42f64.to_radians();
    if min_center < sixty - 1e-9 {
        return Err(Error::ClaimFailure(format!(
            "a ball of P₀ ∖ R is centered {}° from b",
            min_center.to_degrees()
        )));
    }
    if min_near < forty_two - 1e-9 {
        return Err(Error::ClaimFailure(format!(
            "a ball of P₀ ∖ R comes within {}° of b",
            min_near.to_degrees()
        )));
    }
    let alpha = seed.s.radius();
    if !(min_near > alpha) {
        return Err(Error::ClaimFailure("S meets a ball of P₀ ∖ R".into()));
    }
    Ok(ClaimReport {
        min_center_distance: min_center,
        min_nearest_point_distance: min_near,
        s_radius: alpha,
        slack: min_near - alpha,
    })
}
