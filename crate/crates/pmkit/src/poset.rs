//! Finite index posets: grid boxes in Z^n and the literal→clause hybrid.
//!
//! A grid poset is the box `[0, dims_0) × … × [0, dims_{n-1})` under the
//! product order. The LC poset is a disjoint union of integer chains, one per
//! literal label and one per clause label, over a time window
//! `[t_min, t_max]`, with the extra relations `(l, t) ≤ (c, t')` for every
//! literal `l`, clause `c`, and `3 ≤ t ≤ t'`. Cover relations generate the
//! order; commuting squares generate all functoriality constraints.

use thiserror::Error;

/// Times at or above this bound carry literal→clause cross relations.
pub const LC_CROSS_MIN_T: i64 = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("point {0} is not in the poset")]
    PointOutside(String),
    #[error("{0} and {1} are incomparable")]
    Incomparable(String, String),
    #[error("grid poset needs at least one axis")]
    EmptyGrid,
    #[error("LC poset needs t_min <= t_max")]
    BadTimeWindow,
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
}

/// A chain label in the LC poset: a literal index or a clause index into the
/// poset's label lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LcLabel {
    Literal(usize),
    Clause(usize),
}

/// A point of a [`Poset`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Grid(Vec<i64>),
    Lc { label: LcLabel, t: i64 },
}

impl Point {
    pub fn grid(coords: &[i64]) -> Point {
        Point::Grid(coords.to_vec())
    }

    pub fn lc(label: LcLabel, t: i64) -> Point {
        Point::Lc { label, t }
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Point::Grid(c) => {
                write!(f, "(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Point::Lc { label, t } => match label {
                LcLabel::Literal(i) => write!(f, "(L{i},{t})"),
                LcLabel::Clause(i) => write!(f, "(C{i},{t})"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoset {
    dims: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcPoset {
    literals: Vec<String>,
    clauses: Vec<String>,
    t_min: i64,
    t_max: i64,
}

/// A commuting square of cover relations: both two-step paths
/// `base → via_a → apex` and `base → via_b → apex` exist in the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub base: Point,
    pub via_a: Point,
    pub via_b: Point,
    pub apex: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Poset {
    Grid(GridPoset),
    Lc(LcPoset),
}

impl Poset {
    /// Box `[0, dims_i)` per axis under the product order.
    pub fn grid(dims: Vec<i64>) -> Result<Poset, PosetError> {
        if dims.is_empty() || dims.iter().any(|&d| d <= 0) {
            return Err(PosetError::EmptyGrid);
        }
        Ok(Poset::Grid(GridPoset { dims }))
    }

    pub fn lc(
        literals: Vec<String>,
        clauses: Vec<String>,
        t_min: i64,
        t_max: i64,
    ) -> Result<Poset, PosetError> {
        if t_min > t_max {
            return Err(PosetError::BadTimeWindow);
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in literals.iter().chain(clauses.iter()) {
            if !seen.insert(l.clone()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Poset::Lc(LcPoset {
            literals,
            clauses,
            t_min,
            t_max,
        }))
    }

    pub fn grid_dims(&self) -> Option<&[i64]> {
        match self {
            Poset::Grid(g) => Some(&g.dims),
            Poset::Lc(_) => None,
        }
    }

    pub fn lc_parts(&self) -> Option<(&[String], &[String], i64, i64)> {
        match self {
            Poset::Grid(_) => None,
            Poset::Lc(l) => Some((&l.literals, &l.clauses, l.t_min, l.t_max)),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match (self, p) {
            (Poset::Grid(g), Point::Grid(c)) => {
                c.len() == g.dims.len() && c.iter().zip(&g.dims).all(|(&x, &d)| x >= 0 && x < d)
            }
            (Poset::Lc(l), Point::Lc { label, t }) => {
                let label_ok = match label {
                    LcLabel::Literal(i) => *i < l.literals.len(),
                    LcLabel::Clause(i) => *i < l.clauses.len(),
                };
                label_ok && *t >= l.t_min && *t <= l.t_max
            }
            _ => false,
        }
    }

    /// The partial order. Both points must lie in the poset.
    pub fn leq(&self, a: &Point, b: &Point) -> bool {
        debug_assert!(self.contains(a) && self.contains(b));
        match (a, b) {
            (Point::Grid(x), Point::Grid(y)) => x.iter().zip(y).all(|(&u, &v)| u <= v),
            (Point::Lc { label: la, t: ta }, Point::Lc { label: lb, t: tb }) => {
                if la == lb {
                    ta <= tb
                } else {
                    matches!((la, lb), (LcLabel::Literal(_), LcLabel::Clause(_)))
                        && *ta >= LC_CROSS_MIN_T
                        && ta <= tb
                }
            }
            _ => false,
        }
    }

    /// All points in canonical (sorted) order.
    pub fn points(&self) -> Vec<Point> {
        match self {
            Poset::Grid(g) => {
                let mut out = Vec::new();
                let mut cur = vec![0i64; g.dims.len()];
                loop {
                    out.push(Point::Grid(cur.clone()));
                    let mut axis = g.dims.len();
                    loop {
                        if axis == 0 {
                            return out;
                        }
                        axis -= 1;
                        cur[axis] += 1;
                        if cur[axis] < g.dims[axis] {
                            break;
                        }
                        cur[axis] = 0;
                    }
                }
            }
            Poset::Lc(l) => {
                let mut out = Vec::new();
                for i in 0..l.literals.len() {
                    for t in l.t_min..=l.t_max {
                        out.push(Point::lc(LcLabel::Literal(i), t));
                    }
                }
                for i in 0..l.clauses.len() {
                    for t in l.t_min..=l.t_max {
                        out.push(Point::lc(LcLabel::Clause(i), t));
                    }
                }
                out
            }
        }
    }

    /// A generating set of the order: grid unit steps; LC chain successors
    /// plus cross edges `(l,t) → (c,t)` for `t ≥ 3`.
    pub fn cover_relations(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        match self {
            Poset::Grid(g) => {
                for p in self.points() {
                    let Point::Grid(c) = &p else { unreachable!() };
                    for axis in 0..g.dims.len() {
                        if c[axis] + 1 < g.dims[axis] {
                            let mut q = c.clone();
                            q[axis] += 1;
                            out.push((p.clone(), Point::Grid(q)));
                        }
                    }
                }
            }
            Poset::Lc(l) => {
                for i in 0..l.literals.len() {
                    for t in l.t_min..l.t_max {
                        out.push((
                            Point::lc(LcLabel::Literal(i), t),
                            Point::lc(LcLabel::Literal(i), t + 1),
                        ));
                    }
                }
                for i in 0..l.clauses.len() {
                    for t in l.t_min..l.t_max {
                        out.push((
                            Point::lc(LcLabel::Clause(i), t),
                            Point::lc(LcLabel::Clause(i), t + 1),
                        ));
                    }
                }
                for li in 0..l.literals.len() {
                    for ci in 0..l.clauses.len() {
                        for t in LC_CROSS_MIN_T.max(l.t_min)..=l.t_max {
                            out.push((
                                Point::lc(LcLabel::Literal(li), t),
                                Point::lc(LcLabel::Clause(ci), t),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether `a → b` is a cover relation.
    pub fn is_cover(&self, a: &Point, b: &Point) -> bool {
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        match (a, b) {
            (Point::Grid(x), Point::Grid(y)) => {
                let mut bumped = 0usize;
                for (&u, &v) in x.iter().zip(y) {
                    if v == u + 1 {
                        bumped += 1;
                    } else if v != u {
                        return false;
                    }
                }
                bumped == 1
            }
            (Point::Lc { label: la, t: ta }, Point::Lc { label: lb, t: tb }) => {
                if la == lb {
                    *tb == ta + 1
                } else {
                    matches!((la, lb), (LcLabel::Literal(_), LcLabel::Clause(_)))
                        && ta == tb
                        && *ta >= LC_CROSS_MIN_T
                }
            }
            _ => false,
        }
    }

    /// `p + δ·(1,…,1)` on grids, `(label, t + δ)` on LC chains; `None` when
    /// the shifted point falls outside the poset (its space reads as zero).
    pub fn shift_up(&self, p: &Point, delta: u32) -> Option<Point> {
        let q = match p {
            Point::Grid(c) => Point::Grid(c.iter().map(|&x| x + delta as i64).collect()),
            Point::Lc { label, t } => Point::lc(*label, t + delta as i64),
        };
        self.contains(&q).then_some(q)
    }

    /// Commuting pairs of two-step cover paths: grid unit squares over every
    /// axis pair, and LC cross squares
    /// `(l,t) → (c,t) → (c,t+1)` vs `(l,t) → (l,t+1) → (c,t+1)`.
    pub fn squares(&self) -> Vec<Square> {
        let mut out = Vec::new();
        match self {
            Poset::Grid(g) => {
                let n = g.dims.len();
                for p in self.points() {
                    let Point::Grid(c) = &p else { unreachable!() };
                    for i in 0..n {
                        for j in i + 1..n {
                            if c[i] + 1 < g.dims[i] && c[j] + 1 < g.dims[j] {
                                let mut a = c.clone();
                                a[i] += 1;
                                let mut b = c.clone();
                                b[j] += 1;
                                let mut apex = c.clone();
                                apex[i] += 1;
                                apex[j] += 1;
                                out.push(Square {
                                    base: p.clone(),
                                    via_a: Point::Grid(a),
                                    via_b: Point::Grid(b),
                                    apex: Point::Grid(apex),
                                });
                            }
                        }
                    }
                }
            }
            Poset::Lc(l) => {
                for li in 0..l.literals.len() {
                    for ci in 0..l.clauses.len() {
                        for t in LC_CROSS_MIN_T.max(l.t_min)..l.t_max {
                            out.push(Square {
                                base: Point::lc(LcLabel::Literal(li), t),
                                via_a: Point::lc(LcLabel::Clause(ci), t),
                                via_b: Point::lc(LcLabel::Literal(li), t + 1),
                                apex: Point::lc(LcLabel::Clause(ci), t + 1),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// A monotone cover path from `a` to `b` (inclusive endpoints).
    pub fn path_up(&self, a: &Point, b: &Point) -> Result<Vec<Point>, PosetError> {
        if !self.contains(a) {
            return Err(PosetError::PointOutside(a.to_string()));
        }
        if !self.contains(b) {
            return Err(PosetError::PointOutside(b.to_string()));
        }
        if !self.leq(a, b) {
            return Err(PosetError::Incomparable(a.to_string(), b.to_string()));
        }
        let mut path = vec![a.clone()];
        match (a, b) {
            (Point::Grid(x), Point::Grid(y)) => {
                let mut cur = x.clone();
                for axis in 0..x.len() {
                    while cur[axis] < y[axis] {
                        cur[axis] += 1;
                        path.push(Point::Grid(cur.clone()));
                    }
                }
            }
            (Point::Lc { label: la, t: ta }, Point::Lc { label: lb, t: tb }) => {
                let mut t = *ta;
                if la != lb {
                    // Cross over immediately, then climb the clause chain.
                    path.push(Point::lc(*lb, t));
                }
                while t < *tb {
                    t += 1;
                    path.push(Point::lc(*lb, t));
                }
            }
            _ => unreachable!(),
        }
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order_and_covers() {
        let p = Poset::grid(vec![3, 3]).unwrap();
        assert_eq!(p.points().len(), 9);
        assert!(p.leq(&Point::grid(&[0, 1]), &Point::grid(&[2, 1])));
        assert!(!p.leq(&Point::grid(&[1, 0]), &Point::grid(&[0, 1])));
        let covers = p.cover_relations();
        assert_eq!(covers.len(), 12);
        assert!(covers.contains(&(Point::grid(&[0, 0]), Point::grid(&[1, 0]))));
        assert_eq!(p.squares().len(), 4);
    }

    #[test]
    fn grid_shift_falls_off_the_box() {
        let p = Poset::grid(vec![3]).unwrap();
        assert_eq!(p.shift_up(&Point::grid(&[1]), 1), Some(Point::grid(&[2])));
        assert_eq!(p.shift_up(&Point::grid(&[1]), 2), None);
    }

    #[test]
    fn lc_order_has_cross_relations_only_from_t_three() {
        let p = Poset::lc(vec!["x".into()], vec!["c".into()], 1, 5).unwrap();
        let l = |t| Point::lc(LcLabel::Literal(0), t);
        let c = |t| Point::lc(LcLabel::Clause(0), t);
        assert!(p.leq(&l(1), &l(4)));
        assert!(p.leq(&l(3), &c(3)));
        assert!(p.leq(&l(3), &c(5)));
        assert!(p.leq(&l(4), &c(5)));
        assert!(!p.leq(&l(2), &c(2)));
        assert!(!p.leq(&l(2), &c(3)), "cross needs t >= 3 at the source");
        assert!(!p.leq(&l(4), &c(3)));
        assert!(!p.leq(&c(3), &l(4)), "no relations from clauses to literals");
    }

    #[test]
    fn lc_covers_and_squares() {
        let p = Poset::lc(vec!["x".into(), "y".into()], vec!["c".into()], 1, 5).unwrap();
        let covers = p.cover_relations();
        // Chains: 3 labels x 4 steps; cross: 2 literals x 1 clause x t in {3,4,5}.
        assert_eq!(covers.len(), 12 + 6);
        // Squares: 2 literals x 1 clause x t in {3,4}.
        assert_eq!(p.squares().len(), 4);
    }

    #[test]
    fn paths_follow_covers() {
        let g = Poset::grid(vec![4, 4]).unwrap();
        let path = g.path_up(&Point::grid(&[0, 1]), &Point::grid(&[2, 3])).unwrap();
        assert_eq!(path.len(), 5);
        assert_eq!(path.first(), Some(&Point::grid(&[0, 1])));
        assert_eq!(path.last(), Some(&Point::grid(&[2, 3])));

        let p = Poset::lc(vec!["x".into()], vec!["c".into()], 1, 5).unwrap();
        let path = p
            .path_up(&Point::lc(LcLabel::Literal(0), 3), &Point::lc(LcLabel::Clause(0), 5))
            .unwrap();
        assert_eq!(path.len(), 4);
        assert!(p.path_up(&Point::lc(LcLabel::Clause(0), 3), &Point::lc(LcLabel::Literal(0), 5)).is_err());
    }
}
