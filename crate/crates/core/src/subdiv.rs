//! Dual subdivisions of Newton polytopes and the linear-region count.
//!
//! The subdivision of `f` is read off the upper hull of the lifted points
//! `(i, c_i)` of its canonical form, so equal functions give equal
//! subdivisions and every cell lists all of its lattice points.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::geom::lifted::{upper_chain, upper_facets};
use crate::geom::{lattice_points, primitive, Polygon};
use crate::tropical::{Rational, TropPoly};

pub type LatticePoint = Vec<i64>;

/// A maximal cell: its vertices (counterclockwise from the lexicographically
/// smallest for 2-cells, increasing along the line for 1-cells) and all of its
/// lattice points, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    vertices: Vec<LatticePoint>,
    points: Vec<LatticePoint>,
}

impl Cell {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    fn translate(&self, v: &[i64]) -> Cell {
        let shift = |p: &LatticePoint| {
            p.iter()
                .zip(v)
                .map(|(a, b)| a + b)
                .collect::<LatticePoint>()
        };
        Cell {
            vertices: self.vertices.iter().map(shift).collect(),
            points: self.points.iter().map(shift).collect(),
        }
    }
}

/// A 1-cell of a two-dimensional subdivision with the indices of the
/// (one or two) maximal cells containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceEdge {
    pub endpoints: [LatticePoint; 2],
    pub cells: Vec<usize>,
}

impl FaceEdge {
    pub fn is_interior(&self) -> bool {
        self.cells.len() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    arity: usize,
    ambient: Vec<LatticePoint>,
    cells: Vec<Cell>,
}

impl Subdivision {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Dimension of the ambient Newton polytope.
    pub fn dimension(&self) -> usize {
        match self.ambient.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Vertices of the Newton polytope (counterclockwise in the plane).
    pub fn ambient(&self) -> &[LatticePoint] {
        &self.ambient
    }

    /// Maximal cells, sorted by vertex list.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// The 0-cells.
    pub fn vertices(&self) -> BTreeSet<LatticePoint> {
        self.cells
            .iter()
            .flat_map(|c| c.vertices.iter().cloned())
            .collect()
    }

    /// The 1-cells of a two-dimensional subdivision, sorted by endpoints.
    /// Empty for lower-dimensional subdivisions, whose 1-cells are the cells.
    pub fn edges(&self) -> Vec<FaceEdge> {
        if self.dimension() < 2 {
            return Vec::new();
        }
        let mut owners: BTreeMap<[LatticePoint; 2], Vec<usize>> = BTreeMap::new();
        for (idx, cell) in self.cells.iter().enumerate() {
            let n = cell.vertices.len();
            for k in 0..n {
                let (a, b) = (cell.vertices[k].clone(), cell.vertices[(k + 1) % n].clone());
                let key = if a <= b { [a, b] } else { [b, a] };
                owners.entry(key).or_default().push(idx);
            }
        }
        owners
            .into_iter()
            .map(|(endpoints, cells)| FaceEdge { endpoints, cells })
            .collect()
    }

    pub fn translate(&self, v: &[i64]) -> Subdivision {
        let shift = |p: &LatticePoint| {
            p.iter()
                .zip(v)
                .map(|(a, b)| a + b)
                .collect::<LatticePoint>()
        };
        let mut cells: Vec<Cell> = self.cells.iter().map(|c| c.translate(v)).collect();
        cells.sort();
        Subdivision {
            arity: self.arity,
            ambient: self.ambient.iter().map(shift).collect(),
            cells,
        }
    }
}

fn line_cells(to_point: impl Fn(i64) -> LatticePoint, pts: &[(i64, Rational)]) -> Vec<Cell> {
    let chain = upper_chain(pts);
    if chain.len() == 1 {
        let p = to_point(chain[0].0);
        return vec![Cell {
            vertices: vec![p.clone()],
            points: vec![p],
        }];
    }
    chain
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0].0, w[1].0);
            let mut points: Vec<LatticePoint> = (a..=b).map(&to_point).collect();
            points.sort();
            Cell {
                vertices: vec![to_point(a), to_point(b)],
                points,
            }
        })
        .collect()
}

/// Projections of the upper faces of the lifted canonical support.
pub fn dual_subdivision(f: &TropPoly) -> Result<Subdivision> {
    f.require_arity("1 or 2", |n| n == 1 || n == 2)?;
    f.require_nonempty("the dual subdivision")?;
    let canon = f.canonicalize();
    let (ambient, mut cells) = if f.arity() == 1 {
        let pts: Vec<(i64, Rational)> = canon.terms().map(|(e, c)| (e.0[0], c.clone())).collect();
        let (lo, hi) = (pts[0].0, pts[pts.len() - 1].0);
        let ambient = if lo == hi {
            vec![vec![lo]]
        } else {
            vec![vec![lo], vec![hi]]
        };
        (ambient, line_cells(|k| vec![k], &pts))
    } else {
        let pts: Vec<((i64, i64), Rational)> = canon
            .terms()
            .map(|(e, c)| ((e.0[0], e.0[1]), c.clone()))
            .collect();
        let newt = Polygon::from_lattice(&pts.iter().map(|p| p.0).collect::<Vec<_>>());
        let ambient: Vec<LatticePoint> = newt
            .lattice_vertices()?
            .into_iter()
            .map(|(x, y)| vec![x, y])
            .collect();
        let cells = match newt.dimension() {
            // the raw support has the same upper hull as the canonical one
            Some(2) => {
                let raw: Vec<((i64, i64), Rational)> = f
                    .terms()
                    .map(|(e, c)| ((e.0[0], e.0[1]), c.clone()))
                    .collect();
                upper_facets(&raw)
                    .into_iter()
                    .map(|facet| {
                        let members: Vec<(i64, i64)> =
                            facet.members.iter().map(|&m| raw[m].0).collect();
                        let poly = Polygon::from_lattice(&members);
                        let vertices = poly.lattice_vertices().expect("lattice");
                        let points = lattice_points(&poly).expect("lattice");
                        Cell {
                            vertices: vertices.into_iter().map(|(x, y)| vec![x, y]).collect(),
                            points: points.into_iter().map(|(x, y)| vec![x, y]).collect(),
                        }
                    })
                    .collect()
            }
            _ => {
                let origin = pts.iter().map(|p| p.0).min().expect("nonempty");
                let far = pts.iter().map(|p| p.0).max().expect("nonempty");
                let step = if origin == far {
                    (1, 0)
                } else {
                    primitive(far.0 - origin.0, far.1 - origin.1)
                };
                let along = |(x, y): (i64, i64)| {
                    if step.0 != 0 {
                        (x - origin.0) / step.0
                    } else {
                        (y - origin.1) / step.1
                    }
                };
                let line: Vec<(i64, Rational)> =
                    pts.iter().map(|(p, c)| (along(*p), c.clone())).collect();
                line_cells(
                    |k| vec![origin.0 + k * step.0, origin.1 + k * step.1],
                    &line,
                )
            }
        };
        (ambient, cells)
    };
    cells.sort();
    Ok(Subdivision {
        arity: f.arity(),
        ambient,
        cells,
    })
}

/// Number of linear regions of `f`: the number of 0-cells of its dual subdivision.
pub fn mcomp(f: &TropPoly) -> Result<usize> {
    Ok(dual_subdivision(f)?.vertices().len())
}

/// `Some(v)` when `s2` is `s1` translated by the integer vector `v`.
pub fn subdiv_eq_translate(s1: &Subdivision, s2: &Subdivision) -> Option<Vec<i64>> {
    if s1.arity != s2.arity || s1.cells.len() != s2.cells.len() {
        return None;
    }
    let (a, b) = (s1.ambient.iter().min()?, s2.ambient.iter().min()?);
    let v: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    (s1.translate(&v) == *s2).then_some(v)
}
