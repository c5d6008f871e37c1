//! Packings, validity checks, the tangency nerve and kissing statistics.
//!
//! Two balls are tangent when `|gap| <= rtol·(r₁ + r₂)` with
//! `gap = d - (r₁ + r₂)`, and overlap when `gap < -rtol·(r₁ + r₂)`. The
//! distance `d` is angular on S³ and Euclidean in R³.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{angular_distance, euclidean_distance, EuclideanBall, SphericalBall, StereographicChart};
use crate::grid::BallGrid;

pub const DEFAULT_RTOL: f64 = 1e-9;

/// Relative tolerance under which two radii count as the same size.
const RADIUS_TIE_RTOL: f64 = 1e-12;

/// Common interface of spherical and Euclidean balls.
pub trait Ball: Sync {
    fn radius(&self) -> f64;
    fn center_distance(&self, other: &Self) -> f64;
}

impl Ball for SphericalBall {
    fn radius(&self) -> f64 {
        SphericalBall::radius(self)
    }
    fn center_distance(&self, other: &Self) -> f64 {
        angular_distance(self.center(), other.center())
    }
}

impl Ball for EuclideanBall {
    fn radius(&self) -> f64 {
        EuclideanBall::radius(self)
    }
    fn center_distance(&self, other: &Self) -> f64 {
        euclidean_distance(self.center(), other.center())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    Apart,
    Tangent,
    Overlap,
}

/// Gap between two balls and how it classifies under `rtol`. The result is
/// symmetric in its arguments bit for bit.
pub fn contact<B: Ball>(a: &B, b: &B, rtol: f64) -> (Contact, f64) {
    let sum = a.radius() + b.radius();
    let gap = a.center_distance(b) - sum;
    let tol = rtol * sum;
    let kind = if gap < -tol {
        Contact::Overlap
    } else if gap <= tol {
        Contact::Tangent
    } else {
        Contact::Apart
    };
    (kind, gap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    S3,
    R3,
}

impl Chart {
    pub fn name(self) -> &'static str {
        match self {
            Chart::S3 => "s3",
            Chart::R3 => "r3",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Balls {
    S3(Vec<SphericalBall>),
    R3(Vec<EuclideanBall>),
}

/// An ordered list of balls in one chart, with optional per-ball labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Packing {
    balls: Balls,
    labels: Option<Vec<String>>,
}

impl Packing {
    pub fn s3(balls: Vec<SphericalBall>) -> Self {
        Packing {
            balls: Balls::S3(balls),
            labels: None,
        }
    }

    pub fn r3(balls: Vec<EuclideanBall>) -> Self {
        Packing {
            balls: Balls::R3(balls),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} balls",
                labels.len(),
                self.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn chart(&self) -> Chart {
        match self.balls {
            Balls::S3(_) => Chart::S3,
            Balls::R3(_) => Chart::R3,
        }
    }

    pub fn balls(&self) -> &Balls {
        &self.balls
    }

    pub fn spherical(&self) -> Option<&[SphericalBall]> {
        match &self.balls {
            Balls::S3(b) => Some(b),
            Balls::R3(_) => None,
        }
    }

    pub fn euclidean(&self) -> Option<&[EuclideanBall]> {
        match &self.balls {
            Balls::R3(b) => Some(b),
            Balls::S3(_) => None,
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn len(&self) -> usize {
        match &self.balls {
            Balls::S3(b) => b.len(),
            Balls::R3(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn radius(&self, i: usize) -> f64 {
        match &self.balls {
            Balls::S3(b) => b[i].radius(),
            Balls::R3(b) => b[i].radius(),
        }
    }

    /// Stereographic image of an S³ packing; labels are carried over.
    pub fn project(&self, chart: &StereographicChart) -> Result<Packing> {
        let balls = self
            .spherical()
            .ok_or_else(|| Error::UnsupportedChart("projection needs an s3 packing".into()))?;
        let projected = balls
            .iter()
            .map(|b| chart.project_ball(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Packing {
            balls: Balls::R3(projected),
            labels: self.labels.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    pub ok: bool,
    /// Absolute gap of the pair with the smallest relative gap.
    pub min_gap: Option<f64>,
    /// `gap / (r₁ + r₂)` for that pair.
    pub min_relative_gap: Option<f64>,
    pub pair: Option<(usize, usize)>,
}

fn pairwise_min<B: Ball>(balls: &[B]) -> Option<(f64, f64, usize, usize)> {
    let rows: Vec<Option<(f64, f64, usize, usize)>> = (0..balls.len())
        .into_par_iter()
        .map(|i| {
            let mut best: Option<(f64, f64, usize, usize)> = None;
            for j in i + 1..balls.len() {
                let (_, gap) = contact(&balls[i], &balls[j], 0.0);
                let rel = gap / (balls[i].radius() + balls[j].radius());
                if best.is_none_or(|b| rel < b.0) {
                    best = Some((rel, gap, i, j));
                }
            }
            best
        })
        .collect();
    rows.into_iter().flatten().fold(None, |acc, row| match acc {
        Some(a) if a.0 <= row.0 => Some(a),
        _ => Some(row),
    })
}

/// Checks that no two balls overlap by more than `rtol·(r₁ + r₂)`.
pub fn validate_packing(packing: &Packing, rtol: f64) -> ValidityReport {
    let worst = match packing.balls() {
        Balls::S3(b) => pairwise_min(b),
        Balls::R3(b) => pairwise_min(b),
    };
    match worst {
        None => ValidityReport {
            ok: true,
            min_gap: None,
            min_relative_gap: None,
            pair: None,
        },
        Some((rel, gap, i, j)) => ValidityReport {
            ok: rel >= -rtol,
            min_gap: Some(gap),
            min_relative_gap: Some(rel),
            pair: Some((i, j)),
        },
    }
}

/// Tangency graph of a packing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl NerveGraph {
    /// Builds the graph from an edge list; pairs are canonicalized to
    /// `u < w`, sorted and deduplicated.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, w) in edges {
            if u == w {
                return Err(Error::InvalidInput(format!("self-loop at {u}")));
            }
            if u >= vertex_count || w >= vertex_count {
                return Err(Error::InvalidInput(format!("edge ({u}, {w}) out of range")));
            }
            list.push((u.min(w), u.max(w)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, w) in &list {
            adjacency[u].push(w);
            adjacency[w].push(u);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        Ok(NerveGraph {
            vertex_count,
            edges: list,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list with `u < w`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.adjacency[u].binary_search(&w).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NerveStrategy {
    AllPairs,
    Grid,
}

type RowResult = std::result::Result<Vec<usize>, (usize, usize, f64)>;

fn first_overlap(rows: &[RowResult]) -> Option<Error> {
    rows.iter().find_map(|r| match r {
        Err((i, j, gap)) => Some(Error::Overlap {
            first: *i,
            second: *j,
            gap: *gap,
        }),
        Ok(_) => None,
    })
}

fn assemble(n: usize, rows: Vec<RowResult>) -> Result<NerveGraph> {
    if let Some(e) = first_overlap(&rows) {
        return Err(e);
    }
    let edges = rows
        .into_iter()
        .enumerate()
        .flat_map(|(i, r)| r.unwrap_or_default().into_iter().map(move |j| (i, j)));
    NerveGraph::from_edges(n, edges)
}

fn nerve_all_pairs<B: Ball>(balls: &[B], rtol: f64) -> Result<NerveGraph> {
    let rows: Vec<RowResult> = (0..balls.len())
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in i + 1..balls.len() {
                match contact(&balls[i], &balls[j], rtol) {
                    (Contact::Tangent, _) => row.push(j),
                    (Contact::Overlap, gap) => return Err((i, j, gap)),
                    (Contact::Apart, _) => {}
                }
            }
            Ok(row)
        })
        .collect();
    assemble(balls.len(), rows)
}

fn nerve_grid(balls: &[EuclideanBall], rtol: f64) -> Result<NerveGraph> {
    let grid = BallGrid::new(balls);
    let rows: Vec<RowResult> = (0..balls.len())
        .into_par_iter()
        .map(|i| {
            let b = &balls[i];
            let mut row = Vec::new();
            let mut overlap = None;
            // Each pair is found from its smaller ball (ties broken by index).
            grid.for_each_candidate(b.center(), b.radius() * (1.0 + rtol), 1.0 + rtol, b.radius(), |j| {
                let c = &balls[j];
                let larger = c.radius() > b.radius() || (c.radius() == b.radius() && j > i);
                if !larger {
                    return;
                }
                let (u, w) = (i.min(j), i.max(j));
                match contact(&balls[u], &balls[w], rtol) {
                    (Contact::Tangent, _) => row.push(j),
                    (Contact::Overlap, gap) => {
                        if overlap.is_none_or(|(u0, w0, _)| (u, w) < (u0, w0)) {
                            overlap = Some((u, w, gap));
                        }
                    }
                    (Contact::Apart, _) => {}
                }
            });
            match overlap {
                Some(o) => Err(o),
                None => Ok(row),
            }
        })
        .collect();
    if let Some(err) = rows
        .iter()
        .filter_map(|r| r.as_ref().err())
        .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)))
    {
        return Err(Error::Overlap {
            first: err.0,
            second: err.1,
            gap: err.2,
        });
    }
    let edges = rows
        .into_iter()
        .enumerate()
        .flat_map(|(i, r)| r.unwrap_or_default().into_iter().map(move |j| (i, j)));
    NerveGraph::from_edges(balls.len(), edges)
}

/// Tangency nerve of a packing. The grid strategy works on R³ packings only.
pub fn build_nerve(packing: &Packing, rtol: f64, strategy: NerveStrategy) -> Result<NerveGraph> {
    match (packing.balls(), strategy) {
        (Balls::S3(b), NerveStrategy::AllPairs) => nerve_all_pairs(b, rtol),
        (Balls::R3(b), NerveStrategy::AllPairs) => nerve_all_pairs(b, rtol),
        (Balls::R3(b), NerveStrategy::Grid) => nerve_grid(b, rtol),
        (Balls::S3(_), NerveStrategy::Grid) => Err(Error::UnsupportedChart(
            "grid nerve needs an r3 packing; project the s3 packing first".into(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PackingStats {
    pub ball_count: usize,
    pub tangency_count: usize,
    /// `2m/n`, reduced.
    pub k: Ratio<u64>,
    pub k_real: f64,
    /// Largest number of tangent neighbors at least as large as the ball itself.
    pub larger_neighbor_max: usize,
}

pub fn packing_stats(packing: &Packing, nerve: &NerveGraph) -> Result<PackingStats> {
    let n = packing.len();
    if n == 0 {
        return Err(Error::EmptyPacking);
    }
    if nerve.vertex_count() != n {
        return Err(Error::InvalidInput(format!(
            "nerve has {} vertices for {} balls",
            nerve.vertex_count(),
            n
        )));
    }
    let m = nerve.edge_count();
    let k = Ratio::new(2 * m as u64, n as u64);
    let larger_neighbor_max = (0..n)
        .map(|v| {
            let r = packing.radius(v);
            nerve
                .neighbors(v)
                .iter()
                .filter(|&&w| packing.radius(w) >= r * (1.0 - RADIUS_TIE_RTOL))
                .count()
        })
        .max()
        .unwrap_or(0);
    Ok(PackingStats {
        ball_count: n,
        tangency_count: m,
        k,
        k_real: 2.0 * m as f64 / n as f64,
        larger_neighbor_max,
    })
}

/// `2|E| < (8 + 4√3)|V|`, decided in exact integer arithmetic.
pub fn check_nerve_condition(vertex_count: u64, edge_count: u64) -> bool {
    let lhs = 2 * edge_count as i128 - 8 * vertex_count as i128;
    if lhs < 0 {
        return true;
    }
    // lhs < 4√3·v  ⇔  lhs² < 48 v²
    let v = vertex_count as i128;
    (lhs as u128).pow(2) < 48 * (v as u128).pow(2)
}
