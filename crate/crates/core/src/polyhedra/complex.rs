//! Finite unions of polyhedra.

use serde::{Deserialize, Serialize};

use super::polyhedron::{AffineMapQ, Polyhedron};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// A finite union of polyhedra with optional per-cell labels. No face
/// compatibility between cells is required.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyhedralComplex {
    ambient_dim: usize,
    cells: Vec<Polyhedron>,
    labels: Vec<Option<String>>,
}

#[derive(Deserialize)]
struct ComplexRepr {
    ambient_dim: usize,
    cells: Vec<Polyhedron>,
    #[serde(default)]
    labels: Vec<Option<String>>,
}

impl<'de> Deserialize<'de> for PolyhedralComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ComplexRepr::deserialize(d)?;
        let mut c = PolyhedralComplex::new(r.ambient_dim);
        for (k, cell) in r.cells.into_iter().enumerate() {
            let label = r.labels.get(k).cloned().flatten();
            c.push(cell, label).map_err(serde::de::Error::custom)?;
        }
        Ok(c)
    }
}

impl PolyhedralComplex {
    pub fn new(ambient_dim: usize) -> Self {
        PolyhedralComplex { ambient_dim, cells: Vec::new(), labels: Vec::new() }
    }

    pub fn from_cells(ambient_dim: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        let mut c = PolyhedralComplex::new(ambient_dim);
        for p in cells {
            c.push(p, None)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, cell: Polyhedron, label: Option<String>) -> Result<()> {
        if cell.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!("cell in R^{} added to complex in R^{}", cell.ambient_dim(), self.ambient_dim)));
        }
        self.cells.push(cell);
        self.labels.push(label);
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn label(&self, k: usize) -> Option<&str> {
        self.labels[k].as_deref()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Polyhedron, Option<&str>)> {
        self.cells.iter().zip(self.labels.iter().map(|l| l.as_deref()))
    }

    /// Whether the point lies in some cell.
    pub fn membership(&self, x: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains(x))
    }

    /// Largest cell dimension (`-1` for the empty complex).
    pub fn dimension(&self) -> i64 {
        self.cells.iter().map(|c| c.dimension()).max().unwrap_or(-1)
    }

    /// Drops empty cells and cells contained in another cell; among equal
    /// cells the first is kept.
    pub fn maximal_cells(&self) -> PolyhedralComplex {
        let nonempty: Vec<usize> = (0..self.cells.len()).filter(|&i| !self.cells[i].is_empty()).collect();
        let mut keep = Vec::new();
        for &i in &nonempty {
            let dominated = nonempty.iter().any(|&j| {
                j != i
                    && self.cells[j].dimension() >= self.cells[i].dimension()
                    && self.cells[j].contains_polyhedron(&self.cells[i])
                    && (!self.cells[i].contains_polyhedron(&self.cells[j]) || j < i)
            });
            if !dominated {
                keep.push(i);
            }
        }
        PolyhedralComplex {
            ambient_dim: self.ambient_dim,
            cells: keep.iter().map(|&i| self.cells[i].clone()).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Keeps only cells of the given dimension.
    pub fn cells_of_dimension(&self, d: i64) -> PolyhedralComplex {
        let idx: Vec<usize> = (0..self.cells.len()).filter(|&i| self.cells[i].dimension() == d).collect();
        PolyhedralComplex {
            ambient_dim: self.ambient_dim,
            cells: idx.iter().map(|&i| self.cells[i].clone()).collect(),
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Applies an affine map cellwise.
    pub fn image(&self, map: &AffineMapQ) -> PolyhedralComplex {
        PolyhedralComplex { ambient_dim: map.codomain_dim(), cells: self.cells.iter().map(|c| c.linear_image(map)).collect(), labels: self.labels.clone() }
    }

    /// `{0} × C`.
    pub fn prepend_zero_coordinate(&self) -> PolyhedralComplex {
        PolyhedralComplex {
            ambient_dim: self.ambient_dim + 1,
            cells: self.cells.iter().map(|c| c.prepend_zero_coordinate()).collect(),
            labels: self.labels.clone(),
        }
    }

    /// `C + span(dirs)`.
    pub fn add_lineality(&self, dirs: &[Vec<Rational>]) -> PolyhedralComplex {
        PolyhedralComplex { ambient_dim: self.ambient_dim, cells: self.cells.iter().map(|c| c.add_lineality(dirs)).collect(), labels: self.labels.clone() }
    }

    pub fn union(&self, other: &PolyhedralComplex) -> Result<PolyhedralComplex> {
        let mut out = self.clone();
        for (c, l) in other.iter() {
            out.push(c.clone(), l.map(str::to_string))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::polyhedron::{LinConstraint, Relation};
    use crate::scalar::q;

    #[test]
    fn maximal_cells_drop_faces_and_duplicates() {
        let ray = Polyhedron::new(2, vec![LinConstraint::from_ints(&[0, 1], 0, Relation::Eq), LinConstraint::from_ints(&[-1, 0], 0, Relation::Le)]).unwrap();
        let origin = Polyhedron::point(&[q(0, 1), q(0, 1)]);
        let c = PolyhedralComplex::from_cells(2, vec![origin, ray.clone(), ray.clone(), Polyhedron::empty(2)]).unwrap();
        let m = c.maximal_cells();
        assert_eq!(m.len(), 1);
        assert!(m.membership(&[q(3, 1), q(0, 1)]));
        assert!(!m.membership(&[q(-3, 1), q(0, 1)]));
    }
}
