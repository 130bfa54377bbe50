//! The projective plane PG(2,q).
//!
//! Points are one-dimensional subspaces of GF(q)^3 written as row vectors
//! normalized so the first nonzero coordinate is 1. Ids follow the canonical
//! enumeration: `(1, y, z)` gets `y*q + z`, `(0, 1, z)` gets `q^2 + z` and
//! `(0, 0, 1)` is last. Lines are numbered by the same rule applied to their
//! normalized covectors. Matrices act on the right of row vectors.

use serde::Serialize;
use thiserror::Error;

use crate::gf::{Field, FieldElement, FieldError};
use crate::permgrp::Permutation;

pub type PointId = usize;
pub type LineId = usize;
pub type Vector = [FieldElement; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("points must be distinct, got {0} twice")]
    SamePoint(PointId),
    #[error("point id {0} is out of range")]
    UnknownPoint(PointId),
    #[error("line id {0} is out of range")]
    UnknownLine(LineId),
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("point {point} does not lie on line {line}")]
    PointNotOnLine { point: PointId, line: LineId },
    #[error("stabilizer parameters a and b must be nonzero")]
    ZeroParameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Point {
    pub id: PointId,
    pub coords: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub id: LineId,
    pub covector: Vector,
    /// The q + 1 incident points, ascending.
    pub point_ids: Vec<PointId>,
}

/// An invertible 3x3 matrix over the plane's field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjMatrix {
    rows: [Vector; 3],
}

impl ProjMatrix {
    pub fn identity() -> Self {
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        ProjMatrix {
            rows: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    pub fn new(field: &Field, rows: [Vector; 3]) -> Result<Self, PlaneError> {
        let m = ProjMatrix { rows };
        if m.det(field).is_zero() {
            return Err(PlaneError::SingularMatrix);
        }
        Ok(m)
    }

    /// Convenience constructor from raw codes.
    pub fn from_codes(field: &Field, rows: [[u32; 3]; 3]) -> Result<Self, PlaneError> {
        let mut out = [[FieldElement::ZERO; 3]; 3];
        for (r, row) in rows.iter().enumerate() {
            for (c, &code) in row.iter().enumerate() {
                out[r][c] = field.element(code)?;
            }
        }
        ProjMatrix::new(field, out)
    }

    pub fn rows(&self) -> &[Vector; 3] {
        &self.rows
    }

    pub fn det(&self, f: &Field) -> FieldElement {
        let m = &self.rows;
        let minor = |a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement| {
            f.sub(f.mul(a, d), f.mul(b, c))
        };
        let t0 = f.mul(m[0][0], minor(m[1][1], m[1][2], m[2][1], m[2][2]));
        let t1 = f.mul(m[0][1], minor(m[1][0], m[1][2], m[2][0], m[2][2]));
        let t2 = f.mul(m[0][2], minor(m[1][0], m[1][1], m[2][0], m[2][1]));
        f.add(f.sub(t0, t1), t2)
    }

    pub fn mul(&self, f: &Field, other: &ProjMatrix) -> ProjMatrix {
        let mut rows = [[FieldElement::ZERO; 3]; 3];
        for (r, row) in rows.iter_mut().enumerate() {
            *row = row_times(f, &self.rows[r], other);
        }
        ProjMatrix { rows }
    }

    pub fn inverse(&self, f: &Field) -> ProjMatrix {
        let m = &self.rows;
        let det_inv = f.inv(self.det(f)).expect("ProjMatrix is invertible");
        let mut rows = [[FieldElement::ZERO; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                // adjugate: cofactor of (j, i)
                let (r0, r1) = other_two(j);
                let (c0, c1) = other_two(i);
                let cof = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
                let cof = if (i + j) % 2 == 1 { f.neg(cof) } else { cof };
                *entry = f.mul(cof, det_inv);
            }
        }
        ProjMatrix { rows }
    }
}

fn other_two(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn row_times(f: &Field, v: &Vector, m: &ProjMatrix) -> Vector {
    let mut out = [FieldElement::ZERO; 3];
    for (c, slot) in out.iter_mut().enumerate() {
        *slot = (0..3).fold(FieldElement::ZERO, |acc, r| {
            f.add(acc, f.mul(v[r], m.rows[r][c]))
        });
    }
    out
}

/// Parameters of the lower-triangular stabilizer form `[[1,0,0],[d,a,0],[e,f,b]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizerParams {
    pub a: FieldElement,
    pub b: FieldElement,
    pub d: FieldElement,
    pub e: FieldElement,
    pub f: FieldElement,
}

pub fn dot(f: &Field, u: &Vector, v: &Vector) -> FieldElement {
    (0..3).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(u[i], v[i])))
}

pub fn cross(f: &Field, u: &Vector, v: &Vector) -> Vector {
    let c = |i: usize, j: usize| f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
    [c(1, 2), c(2, 0), c(0, 1)]
}

pub fn scale(f: &Field, s: FieldElement, v: &Vector) -> Vector {
    [f.mul(s, v[0]), f.mul(s, v[1]), f.mul(s, v[2])]
}

pub fn add(f: &Field, u: &Vector, v: &Vector) -> Vector {
    [f.add(u[0], v[0]), f.add(u[1], v[1]), f.add(u[2], v[2])]
}

/// Scales `v` so its first nonzero coordinate is 1.
pub fn normalize(f: &Field, v: &Vector) -> Result<Vector, PlaneError> {
    let lead = v.iter().copied().find(|c| !c.is_zero()).ok_or(PlaneError::ZeroVector)?;
    let inv = f.inv(lead)?;
    Ok(scale(f, inv, v))
}

#[derive(Debug, Clone)]
pub struct Plane {
    field: Field,
    points: Vec<Point>,
    lines: Vec<Line>,
    lines_through: Vec<Vec<LineId>>,
}

impl Plane {
    pub fn new(field: Field) -> Self {
        let q = field.order() as usize;
        let n = q * q + q + 1;
        let points: Vec<Point> = (0..n)
            .map(|id| Point {
                id,
                coords: canonical_vector(&field, id),
            })
            .collect();
        let mut lines = Vec::with_capacity(n);
        let mut lines_through = vec![Vec::with_capacity(q + 1); n];
        for id in 0..n {
            let covector = canonical_vector(&field, id);
            let point_ids = points_on(&field, &covector);
            for &p in &point_ids {
                lines_through[p].push(id);
            }
            lines.push(Line {
                id,
                covector,
                point_ids,
            });
        }
        Plane {
            field,
            points,
            lines,
            lines_through,
        }
    }

    pub fn with_order(q: u64) -> Result<Self, PlaneError> {
        Ok(Plane::new(Field::with_order(q)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order() as usize
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn point(&self, id: PointId) -> Result<&Point, PlaneError> {
        self.points.get(id).ok_or(PlaneError::UnknownPoint(id))
    }

    pub fn line(&self, id: LineId) -> Result<&Line, PlaneError> {
        self.lines.get(id).ok_or(PlaneError::UnknownLine(id))
    }

    pub fn coords(&self, id: PointId) -> &Vector {
        &self.points[id].coords
    }

    /// Lines incident with a point, ascending.
    pub fn lines_through(&self, id: PointId) -> &[LineId] {
        &self.lines_through[id]
    }

    /// Id of the projective point spanned by a nonzero vector.
    pub fn point_id(&self, v: &Vector) -> Result<PointId, PlaneError> {
        Ok(canonical_rank(&self.field, &normalize(&self.field, v)?))
    }

    /// Id of the line with the given (not necessarily normalized) covector.
    pub fn line_id(&self, covector: &Vector) -> Result<LineId, PlaneError> {
        self.point_id(covector)
    }

    /// Point id from raw coordinate codes.
    pub fn point_from_codes(&self, codes: [u32; 3]) -> Result<PointId, PlaneError> {
        let f = &self.field;
        self.point_id(&[f.element(codes[0])?, f.element(codes[1])?, f.element(codes[2])?])
    }

    pub fn incident(&self, point: PointId, line: LineId) -> bool {
        dot(&self.field, &self.points[point].coords, &self.lines[line].covector).is_zero()
    }

    pub fn line_through(&self, a: PointId, b: PointId) -> Result<LineId, PlaneError> {
        self.point(a)?;
        self.point(b)?;
        if a == b {
            return Err(PlaneError::SamePoint(a));
        }
        self.line_id(&cross(&self.field, self.coords(a), self.coords(b)))
    }

    pub fn collinear(&self, a: PointId, b: PointId, c: PointId) -> Result<bool, PlaneError> {
        self.point(c)?;
        if c == a || c == b {
            return Err(PlaneError::SamePoint(c));
        }
        let ell = self.line_through(a, b)?;
        Ok(self.incident(c, ell))
    }

    pub fn apply_matrix(&self, m: &ProjMatrix, a: PointId) -> Result<PointId, PlaneError> {
        let v = row_times(&self.field, &self.point(a)?.coords, m);
        self.point_id(&v)
    }

    /// The permutation of all point ids induced by `m`.
    pub fn matrix_permutation(&self, m: &ProjMatrix) -> Permutation {
        let images = (0..self.num_points())
            .map(|a| self.apply_matrix(m, a).expect("invertible matrices map points to points"))
            .collect();
        Permutation::from_images(images).expect("invertible matrices induce bijections")
    }

    /// A collineation fixing `alpha` and the line `ell` through it.
    ///
    /// The triangular form `[[1,0,0],[d,a,0],[e,f,b]]` fixes `<e1>` and the
    /// line `z = 0`; it is conjugated by the change of basis sending `e1` to
    /// `alpha`, `e2` to the least-id other point of `ell` and `e3` to the
    /// least-id point off `ell`.
    pub fn line_stabilizer_element(
        &self,
        alpha: PointId,
        ell: LineId,
        params: StabilizerParams,
    ) -> Result<ProjMatrix, PlaneError> {
        self.point(alpha)?;
        let line = self.line(ell)?;
        if !self.incident(alpha, ell) {
            return Err(PlaneError::PointNotOnLine { point: alpha, line: ell });
        }
        if params.a.is_zero() || params.b.is_zero() {
            return Err(PlaneError::ZeroParameter);
        }
        let f = &self.field;
        let second = *line
            .point_ids
            .iter()
            .find(|&&p| p != alpha)
            .expect("lines have q + 1 >= 4 points");
        let off = (0..self.num_points())
            .find(|&p| !self.incident(p, ell))
            .expect("some point lies off every line");
        let basis = ProjMatrix::new(f, [*self.coords(alpha), *self.coords(second), *self.coords(off)])?;
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        let StabilizerParams { a, b, d, e, f: ff } = params;
        let core = ProjMatrix::new(f, [[o, z, z], [d, a, z], [e, ff, b]])?;
        Ok(basis.inverse(f).mul(f, &core).mul(f, &basis))
    }
}

fn canonical_vector(f: &Field, id: usize) -> Vector {
    let q = f.order() as usize;
    let el = |c: usize| FieldElement::from_code(c as u32);
    if id < q * q {
        [FieldElement::ONE, el(id / q), el(id % q)]
    } else if id < q * q + q {
        [FieldElement::ZERO, FieldElement::ONE, el(id - q * q)]
    } else {
        [FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]
    }
}

fn canonical_rank(f: &Field, v: &Vector) -> usize {
    let q = f.order() as usize;
    let c = |i: usize| v[i].code() as usize;
    if !v[0].is_zero() {
        c(1) * q + c(2)
    } else if !v[1].is_zero() {
        q * q + c(2)
    } else {
        q * q + q
    }
}

fn points_on(f: &Field, covector: &Vector) -> Vec<PointId> {
    let basis = [
        [FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO],
        [FieldElement::ZERO, FieldElement::ONE, FieldElement::ZERO],
        [FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE],
    ];
    // covector x e_i lies in the annihilator; two independent ones span it.
    let candidates: Vec<Vector> = basis
        .iter()
        .map(|e| cross(f, covector, e))
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect();
    let u = candidates[0];
    let v = *candidates[1..]
        .iter()
        .find(|w| cross(f, &u, w).iter().any(|c| !c.is_zero()))
        .expect("a nonzero covector has a two-dimensional annihilator");
    let mut ids: Vec<PointId> = std::iter::once(v)
        .chain(f.elements().map(|s| add(f, &u, &scale(f, s, &v))))
        .map(|w| canonical_rank(f, &normalize(f, &w).expect("independent vectors")))
        .collect();
    ids.sort_unstable();
    ids
}
