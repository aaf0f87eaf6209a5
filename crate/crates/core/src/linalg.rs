//! Incremental fraction-free row echelon over an exact integer domain.
//!
//! Rows are reduced by cross-multiplication only, so every intermediate
//! entry is an exact integer; content is divided out after each reduction
//! step to keep entries small. The tracked variant carries the integer
//! combination of inserted rows alongside each stored row, which yields
//! exact kernel vectors.

use crate::scalar::{ExactInt, Int, Rat};

/// Divides a slice by the gcd of its entries and fixes the sign of the
/// first nonzero entry to be positive. No-op on the zero vector.
fn reduce_content<I: ExactInt>(row: &mut [I]) {
    let mut g = I::zero();
    for e in row.iter() {
        g = g.gcd(e);
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = row
        .iter()
        .find(|e| !e.is_zero())
        .map(|e| e.is_negative())
        .unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for e in row.iter_mut() {
            *e = e.clone() / g.clone();
        }
    }
}

fn pivot_of<I: ExactInt>(row: &[I]) -> Option<usize> {
    row.iter().position(|e| !e.is_zero())
}

/// `row = a * row - b * other`, in place.
fn combine<I: ExactInt>(row: &mut [I], a: &I, b: &I, other: &[I]) {
    for (r, o) in row.iter_mut().zip(other) {
        *r = a.clone() * r.clone() - b.clone() * o.clone();
    }
}

/// Row-echelon accumulator. Rows are kept sorted by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<I: ExactInt = Int> {
    ncols: usize,
    rows: Vec<Vec<I>>,
}

impl<I: ExactInt> Echelon<I> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|r| pivot_of(r).unwrap()).collect()
    }

    /// The stored echelon rows, sorted by pivot column.
    pub fn rows(&self) -> &[Vec<I>] {
        &self.rows
    }

    fn reduce(&self, row: &mut Vec<I>) {
        for stored in &self.rows {
            let p = pivot_of(stored).unwrap();
            if row[p].is_zero() {
                continue;
            }
            let (a, b) = (stored[p].clone(), row[p].clone());
            combine(row, &a, &b, stored);
            reduce_content(row);
        }
    }

    /// Inserts a row; returns true when it was independent of the span.
    pub fn insert(&mut self, mut row: Vec<I>) -> bool {
        assert_eq!(row.len(), self.ncols);
        reduce_content(&mut row);
        self.reduce(&mut row);
        match pivot_of(&row) {
            None => false,
            Some(p) => {
                let at = self
                    .rows
                    .partition_point(|r| pivot_of(r).unwrap() < p);
                self.rows.insert(at, row);
                true
            }
        }
    }

    /// Membership of `row` in the current row span.
    pub fn contains(&self, row: &[I]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut row = row.to_vec();
        self.reduce(&mut row);
        pivot_of(&row).is_none()
    }
}

/// Echelon accumulator that tracks, for each stored row, an integer
/// combination of the inserted rows equal to it. When an inserted row is
/// dependent, the combination witnessing the dependency is returned: a
/// kernel vector of the matrix whose rows are the insertions so far,
/// with a nonzero entry in the last position.
#[derive(Clone, Debug)]
pub struct TrackedEchelon<I: ExactInt = Int> {
    ncols: usize,
    inserted: usize,
    rows: Vec<(Vec<I>, Vec<I>)>,
}

impl<I: ExactInt> TrackedEchelon<I> {
    pub fn new(ncols: usize) -> Self {
        TrackedEchelon { ncols, inserted: 0, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a row. `Ok(())` when independent; `Err(tags)` returns the
    /// kernel vector (length = number of insertions so far, last entry
    /// nonzero) when dependent.
    pub fn insert(&mut self, mut row: Vec<I>) -> std::result::Result<(), Vec<I>> {
        assert_eq!(row.len(), self.ncols);
        let idx = self.inserted;
        self.inserted += 1;
        let mut tags = vec![I::zero(); idx + 1];
        tags[idx] = I::one();
        for (stored, stored_tags) in &self.rows {
            let p = pivot_of(stored).unwrap();
            if row[p].is_zero() {
                continue;
            }
            let (a, b) = (stored[p].clone(), row[p].clone());
            combine(&mut row, &a, &b, stored);
            // tag vectors of earlier rows are shorter; combine up to length
            for (i, t) in tags.iter_mut().enumerate() {
                let o = stored_tags.get(i).cloned().unwrap_or_else(I::zero);
                *t = a.clone() * t.clone() - b.clone() * o;
            }
            // divide out the joint content so the pair stays consistent
            let mut joint: Vec<I> = row.iter().chain(tags.iter()).cloned().collect();
            reduce_content(&mut joint);
            tags = joint.split_off(self.ncols);
            row = joint;
        }
        match pivot_of(&row) {
            Some(p) => {
                let at = self
                    .rows
                    .partition_point(|(r, _)| pivot_of(r).unwrap() < p);
                self.rows.insert(at, (row, tags));
                Ok(())
            }
            None => {
                debug_assert!(!tags[idx].is_zero(), "dependent row must use itself");
                Err(tags)
            }
        }
    }
}

/// Clears denominators: scales a rational row by the lcm of denominators,
/// producing an integer row spanning the same line.
pub fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    use num_integer::Integer;
    let mut l = Int::from(1);
    for r in row {
        l = l.lcm(r.denom());
    }
    row.iter()
        .map(|r| r.numer() * (&l / r.denom()))
        .collect()
}
