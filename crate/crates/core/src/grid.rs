//! Multi-level hash grid over Euclidean balls.
//!
//! Each ball is bucketed by its center at the level whose cell edge is the
//! smallest power of two not below its diameter. A query from a point asks for
//! every ball `C` with `|x - c| <= reach + scale·r(C)`; at each level the cell
//! window is sized from the largest radius stored there, so the result is exact
//! (a superset that callers then test pair by pair).

use std::collections::{BTreeMap, HashMap};

use crate::geom::EuclideanBall;

type CellKey = [i64; 3];

struct Level {
    cell: f64,
    max_radius: f64,
    members: Vec<u32>,
    cells: HashMap<CellKey, Vec<u32>>,
}

pub struct BallGrid<'a> {
    balls: &'a [EuclideanBall],
    levels: BTreeMap<i32, Level>,
}

fn level_of(radius: f64) -> i32 {
    // cell edge 2^L >= 2r
    let l = (2.0 * radius).log2().ceil() as i32;
    if 2f64.powi(l) < 2.0 * radius {
        l + 1
    } else {
        l
    }
}

fn cell_of(x: &[f64; 3], cell: f64) -> CellKey {
    // `as` saturates; saturated keys only merge far-away cells
    [
        (x[0] / cell).floor() as i64,
        (x[1] / cell).floor() as i64,
        (x[2] / cell).floor() as i64,
    ]
}

impl<'a> BallGrid<'a> {
    pub fn new(balls: &'a [EuclideanBall]) -> Self {
        let mut levels: BTreeMap<i32, Level> = BTreeMap::new();
        for (i, b) in balls.iter().enumerate() {
            let l = level_of(b.radius());
            let level = levels.entry(l).or_insert_with(|| Level {
                cell: 2f64.powi(l),
                max_radius: 0.0,
                members: Vec::new(),
                cells: HashMap::new(),
            });
            level.max_radius = level.max_radius.max(b.radius());
            level.members.push(i as u32);
            let key = cell_of(b.center(), level.cell);
            level.cells.entry(key).or_default().push(i as u32);
        }
        BallGrid { balls, levels }
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    /// Calls `visit(j)` for every ball `j` of radius at least `min_radius`
    /// that could satisfy `|x - c_j| <= reach + scale·r_j`. Each ball is
    /// visited at most once.
    pub fn for_each_candidate(
        &self,
        x: &[f64; 3],
        reach: f64,
        scale: f64,
        min_radius: f64,
        mut visit: impl FnMut(usize),
    ) {
        for level in self.levels.values() {
            if level.max_radius < min_radius {
                continue;
            }
            let span = reach + scale * level.max_radius;
            let range = (span / level.cell).ceil();
            let window = (2.0 * range + 1.0).powi(3);
            if !(window < level.members.len() as f64) || range > (i32::MAX as f64) {
                for &j in &level.members {
                    visit(j as usize);
                }
                continue;
            }
            let range = range as i64;
            let base = cell_of(x, level.cell);
            for dx in -range..=range {
                for dy in -range..=range {
                    for dz in -range..=range {
                        let key = [
                            base[0].saturating_add(dx),
                            base[1].saturating_add(dy),
                            base[2].saturating_add(dz),
                        ];
                        if let Some(list) = level.cells.get(&key) {
                            for &j in list {
                                visit(j as usize);
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn balls(&self) -> &'a [EuclideanBall] {
        self.balls
    }
}
