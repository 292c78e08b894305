//! Exact rational linear algebra over the split abelian subspace, plus
//! enumeration of a finite test-ray set covering every one-dimensional face
//! of a central hyperplane arrangement.
//!
//! Everything here is integer/rational arithmetic on `BigInt`/`BigRational`;
//! no floating point appears anywhere in this module.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of distinct rays collected while enumerating
/// test directions. Failure is loud (`Error::ResourceLimit`), never a
/// truncation.
pub const DEFAULT_RAY_CAP: u64 = 2_000_000;

/// Divide by the content (gcd of entries) and flip signs so the first nonzero
/// entry is positive. `None` for the zero vector.
fn canonical_primitive(coeffs: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut content = BigInt::zero();
    for c in coeffs {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return None;
    }
    let mut out: Vec<BigInt> = coeffs.iter().map(|c| c / &content).collect();
    let flip = out
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if flip {
        for c in &mut out {
            *c = -(c.clone());
        }
    }
    Some(out)
}

fn negated(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|c| -c.clone()).collect()
}

/// Order on canonical ray vectors: coordinatewise by magnitude, with the
/// non-negative value first on magnitude ties. Deterministic witness and
/// certificate ordering depends on this, so keep it stable.
pub fn ray_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.abs().cmp(&y.abs()) {
            Ordering::Equal => {}
            other => return other,
        }
        match (x.is_negative(), y.is_negative()) {
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            _ => {}
        }
    }
    a.len().cmp(&b.len())
}

/// Exact point of the split abelian subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVector {
    coords: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn from_ints(coords: &[BigInt]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Canonical integer covector: entries coprime, first nonzero entry positive.
/// Canonicalization identifies λ with −λ, which is sound because all
/// downstream consumers only look at |λ(Y)|.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFunctional {
    coeffs: Vec<BigInt>,
}

impl LinearFunctional {
    /// Canonical form of a nonzero integer covector.
    pub fn canonicalize(coeffs: &[BigInt]) -> Result<Self> {
        canonical_primitive(coeffs)
            .map(|coeffs| Self { coeffs })
            .ok_or(Error::ZeroFunctional)
    }

    pub fn canonicalize_i64(coeffs: &[i64]) -> Result<Self> {
        let ints: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::canonicalize(&ints)
    }

    /// Canonical form of a nonzero rational covector. Scaling by any positive
    /// rational is quotiented out, so only the line through the covector
    /// matters.
    pub fn canonicalize_rational(coeffs: &[BigRational]) -> Result<Self> {
        let mut denom_lcm = BigInt::one();
        for c in coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        Self::canonicalize(&ints)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// λ(Y) for a rational point.
    pub fn eval(&self, point: &RationalVector) -> Result<BigRational> {
        if point.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.dim(),
            });
        }
        let mut acc = BigRational::zero();
        for (c, y) in self.coeffs.iter().zip(point.coords()) {
            acc += BigRational::from_integer(c.clone()) * y;
        }
        Ok(acc)
    }

    /// λ(Y) for an integer point; exact and allocation-light.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        debug_assert_eq!(point.len(), self.dim());
        let mut acc = BigInt::zero();
        for (c, y) in self.coeffs.iter().zip(point.iter()) {
            acc += c * y;
        }
        acc
    }
}

impl std::fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Integer row-echelon accumulator. Rows are kept content-reduced; every
/// inserted row has zeros at all previously recorded pivots, which makes
/// single-pass residual reduction sound.
#[derive(Clone, Debug)]
struct Echelon {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn residual(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = w[p].clone();
            for j in 0..self.dim {
                w[j] = &w[j] * &a - &row[j] * &b;
            }
        }
        if let Some(reduced) = canonical_primitive(&w) {
            reduced
        } else {
            vec![BigInt::zero(); self.dim]
        }
    }

    /// Insert `v` if it is independent of the stored rows; reports whether
    /// the rank grew.
    fn insert(&mut self, v: &[BigInt]) -> bool {
        let w = self.residual(v);
        match w.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(p) => {
                self.rows.push(w);
                self.pivots.push(p);
                true
            }
        }
    }

    fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }
}

/// Rank of the subspace spanned by the normals inside the dual of a
/// `dim`-dimensional space, computed over the integers.
///
/// Panics if a normal has the wrong length; callers validate dimensions.
pub fn rank(normals: &[LinearFunctional], dim: usize) -> usize {
    let mut ech = Echelon::new(dim);
    for n in normals {
        assert_eq!(n.dim(), dim, "normal has wrong dimension");
        ech.insert(n.coeffs());
    }
    ech.rank()
}

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination with row pivoting. The empty matrix has determinant 1.
fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(r) => r,
            None => return BigInt::zero(),
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Primitive direction of the kernel line of a `(dim−1)×dim` integer matrix
/// of full row rank, via signed maximal minors.
fn kernel_line_minors(rows: &[&[BigInt]], dim: usize) -> Option<Vec<BigInt>> {
    debug_assert_eq!(rows.len() + 1, dim);
    let mut v = vec![BigInt::zero(); dim];
    for (j, slot) in v.iter_mut().enumerate() {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det_int(minor);
        *slot = if j.is_multiple_of(2) { d } else { -d };
    }
    canonical_primitive(&v)
}

/// Integer basis of the common kernel {x : row·x = 0 for every row}.
/// Computed by rational Gauss-Jordan followed by denominator clearing; each
/// basis vector comes out primitive with canonical sign.
pub(crate) fn kernel_basis(rows: &[&[BigInt]], dim: usize) -> Vec<Vec<BigInt>> {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_row = 0usize;
    for col in 0..dim {
        let pivot_row = (next_row..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        mat.swap(next_row, pr);
        let inv = mat[next_row][col].recip();
        for c in &mut mat[next_row] {
            *c *= &inv;
        }
        for r in 0..mat.len() {
            if r != next_row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                let pivot_row = mat[next_row].clone();
                for (cell, pivot) in mat[r].iter_mut().zip(&pivot_row) {
                    *cell -= &factor * pivot;
                }
            }
        }
        pivot_cols.push(col);
        next_row += 1;
        if next_row == mat.len() {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); dim];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -mat[row][free].clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in &v {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = v
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        basis.push(canonical_primitive(&ints).expect("free column yields a nonzero kernel vector"));
    }
    basis
}

/// Finite test-direction set for a central arrangement ∪ ker λ.
///
/// Rays are stored as one canonical primitive representative per ±pair and
/// the set is closed under negation. When `lineality_dim == 0` the rays
/// cover every one-dimensional face of the arrangement, so a function that
/// is linear on each sign chamber is globally non-negative iff it is
/// non-negative on all of them. When `lineality_dim > 0` the rays are
/// transversal directions for the quotient arrangement (one per face of
/// dimension `lineality_dim + 1`) and a nonzero vector of the common kernel
/// is reported as the lineality witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySet {
    dim: usize,
    lineality_dim: usize,
    lineality_witness: Option<Vec<BigInt>>,
    rays: Vec<Vec<BigInt>>,
}

impl RaySet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality_dim
    }

    pub fn lineality_witness(&self) -> Option<&[BigInt]> {
        self.lineality_witness.as_deref()
    }

    /// Canonical representatives, one per ±pair, in `ray_cmp` order.
    pub fn ray_reps(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn pair_count(&self) -> usize {
        self.rays.len()
    }

    /// Both members of every ±pair.
    pub fn iter_signed(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        self.rays
            .iter()
            .flat_map(|r| [r.clone(), negated(r)].into_iter())
    }

    /// Whether the given nonzero direction (up to positive scaling and sign)
    /// is present.
    pub fn contains_direction(&self, v: &[BigInt]) -> bool {
        match canonical_primitive(v) {
            None => false,
            Some(c) => self.rays.iter().any(|r| r == &c),
        }
    }
}

/// Enumerate test rays for the central arrangement of the given canonical
/// normals.
///
/// With `r = rank(normals)` the lineality dimension is `dim − r`. Rays are
/// obtained as kernel directions of all independent subsets of size `r − 1`:
/// in the essential case (`r == dim`) this is exactly the set of
/// one-dimensional faces of the arrangement, and in the non-essential case
/// one transversal direction is produced per minimal face above the
/// lineality space. Backtracking prunes dependent prefixes; `cap` bounds the
/// number of distinct rays collected, and exceeding it aborts loudly rather
/// than truncating.
pub fn enumerate_test_rays(normals: &[LinearFunctional], dim: usize, cap: u64) -> Result<RaySet> {
    for n in normals {
        if n.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: n.dim(),
            });
        }
    }
    let dedup: BTreeSet<&LinearFunctional> = normals.iter().collect();
    let rows: Vec<&[BigInt]> = dedup.iter().map(|n| n.coeffs()).collect();

    let mut full = Echelon::new(dim);
    for row in &rows {
        full.insert(row);
    }
    let rank = full.rank();
    let lineality_dim = dim - rank;

    let lineality_witness = if lineality_dim > 0 {
        let basis = kernel_basis(&rows, dim);
        Some(
            basis
                .into_iter()
                .next()
                .expect("lineality space is nonzero"),
        )
    } else {
        None
    };

    let mut found: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    if rank > 0 {
        let target = rank - 1;
        // Essential arrangements with small entries run on checked i128
        // arithmetic; anything that overflows retries on BigInt. Both paths
        // visit subsets in the same order, so cap accounting agrees.
        let fast_result = if rank == dim {
            fast::try_enumerate(&rows, dim, cap)?
        } else {
            None
        };
        match fast_result {
            Some(rays) => found = rays,
            None => {
                let mut enumerator = SubsetEnumerator {
                    rows: &rows,
                    dim,
                    rank,
                    target,
                    cap,
                    examined: 0,
                    found: &mut found,
                };
                let mut chosen = Vec::with_capacity(target);
                let mut ech = Echelon::new(dim);
                enumerator.run(0, &mut chosen, &mut ech)?;
            }
        }
    }

    let mut rays: Vec<Vec<BigInt>> = found.into_iter().collect();
    rays.sort_by(|a, b| ray_cmp(a, b));

    Ok(RaySet {
        dim,
        lineality_dim,
        lineality_witness,
        rays,
    })
}

struct SubsetEnumerator<'a> {
    rows: &'a [&'a [BigInt]],
    dim: usize,
    rank: usize,
    target: usize,
    cap: u64,
    examined: u64,
    found: &'a mut BTreeSet<Vec<BigInt>>,
}

impl SubsetEnumerator<'_> {
    fn charge(&mut self) -> Result<()> {
        self.examined += 1;
        if self.examined > self.cap {
            Err(Error::ResourceLimit {
                examined: self.examined,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn run(&mut self, start: usize, chosen: &mut Vec<usize>, ech: &mut Echelon) -> Result<()> {
        if chosen.len() == self.target {
            let subset: Vec<&[BigInt]> = chosen.iter().map(|&i| self.rows[i]).collect();
            let direction = if self.rank == self.dim {
                kernel_line_minors(&subset, self.dim)
                    .expect("independent subset of size dim-1 spans a hyperplane")
            } else {
                // Kernel strictly contains the lineality space; pick the
                // first basis vector not annihilated by every normal.
                let basis = kernel_basis(&subset, self.dim);
                let transversal = basis
                    .into_iter()
                    .find(|b| self.rows.iter().any(|row| !dot_int(row, b).is_zero()));
                transversal.expect("kernel of a size rank-1 subset exceeds the lineality space")
            };
            if self.found.insert(direction) {
                self.charge()?;
            }
            return Ok(());
        }
        let needed = self.target - chosen.len();
        for i in start..self.rows.len() {
            if self.rows.len() - i < needed {
                break;
            }
            if ech.insert(self.rows[i]) {
                chosen.push(i);
                self.run(i + 1, chosen, ech)?;
                chosen.pop();
                ech.pop();
            }
        }
        Ok(())
    }
}

/// Checked-i128 twin of the BigInt enumeration path, for essential
/// arrangements (rank == dim). Returns `Ok(None)` when an input entry or an
/// intermediate does not fit, in which case the caller reruns on BigInt.
/// Subset traversal order and cap accounting match the BigInt path exactly.
mod fast {
    use super::*;

    fn to_i128_rows(rows: &[&[BigInt]]) -> Option<Vec<Vec<i128>>> {
        rows.iter()
            .map(|r| r.iter().map(|c| i128::try_from(c).ok()).collect())
            .collect()
    }

    /// `None` on overflow (|i128::MIN| does not exist), `Some(false)` for
    /// the zero vector.
    fn content_reduce(v: &mut [i128]) -> Option<bool> {
        if v.contains(&i128::MIN) {
            return None;
        }
        let mut g: i128 = 0;
        for &c in v.iter() {
            g = g.gcd(&c);
        }
        if g == 0 {
            return Some(false);
        }
        for c in v.iter_mut() {
            *c /= g;
        }
        Some(true)
    }

    struct EchelonFast {
        dim: usize,
        rows: Vec<Vec<i128>>,
        pivots: Vec<usize>,
    }

    impl EchelonFast {
        fn new(dim: usize) -> Self {
            Self {
                dim,
                rows: Vec::new(),
                pivots: Vec::new(),
            }
        }

        /// `Some(true)` if inserted, `Some(false)` if dependent, `None` on
        /// overflow.
        fn insert(&mut self, v: &[i128]) -> Option<bool> {
            // Entries only need reducing when they grow; scaling a residual
            // never moves its first nonzero position, so lazy reduction
            // leaves every independence decision unchanged.
            const REDUCE_ABOVE: u128 = 1 << 48;
            let mut w = v.to_vec();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if w[p] == 0 {
                    continue;
                }
                let a = row[p];
                let b = w[p];
                for j in 0..self.dim {
                    let left = w[j].checked_mul(a)?;
                    let right = row[j].checked_mul(b)?;
                    w[j] = left.checked_sub(right)?;
                }
                if w.iter().any(|c| c.unsigned_abs() > REDUCE_ABOVE) {
                    content_reduce(&mut w)?;
                }
            }
            match w.iter().position(|&c| c != 0) {
                None => Some(false),
                Some(p) => {
                    content_reduce(&mut w)?;
                    self.rows.push(w);
                    self.pivots.push(p);
                    Some(true)
                }
            }
        }

        fn pop(&mut self) {
            self.rows.pop();
            self.pivots.pop();
        }

        /// Kernel direction of the current (dim−1)-row echelon, by
        /// fraction-free back-substitution. Inserted rows carry zeros at all
        /// earlier pivots, so solving in reverse insertion order closes the
        /// system; uniform rescaling keeps already-satisfied rows satisfied.
        fn kernel_direction(&self) -> Option<Vec<BigInt>> {
            debug_assert_eq!(self.rows.len() + 1, self.dim);
            let mut is_pivot = vec![false; self.dim];
            for &p in &self.pivots {
                is_pivot[p] = true;
            }
            let free = (0..self.dim).position(|j| !is_pivot[j])?;
            let mut v = vec![0i128; self.dim];
            v[free] = 1;
            for k in (0..self.rows.len()).rev() {
                let row = &self.rows[k];
                let p = self.pivots[k];
                let mut s: i128 = 0;
                for j in 0..self.dim {
                    s = s.checked_add(row[j].checked_mul(v[j])?)?;
                }
                let a = row[p];
                for c in v.iter_mut() {
                    *c = c.checked_mul(a)?;
                }
                v[p] = s.checked_neg()?;
                if v.iter().any(|c| c.unsigned_abs() > (1 << 48)) {
                    content_reduce(&mut v)?;
                }
            }
            let ints: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
            canonical_primitive(&ints)
        }
    }

    struct FastEnumerator<'a> {
        rows: &'a [Vec<i128>],
        target: usize,
        cap: u64,
        examined: u64,
        found: BTreeSet<Vec<BigInt>>,
    }

    enum Abort {
        Overflow,
        Cap(u64),
    }

    type FResult<T> = std::result::Result<T, Abort>;

    impl FastEnumerator<'_> {
        fn charge(&mut self) -> FResult<()> {
            self.examined += 1;
            if self.examined > self.cap {
                Err(Abort::Cap(self.examined))
            } else {
                Ok(())
            }
        }

        fn run(
            &mut self,
            start: usize,
            chosen: &mut Vec<usize>,
            ech: &mut EchelonFast,
        ) -> FResult<()> {
            if chosen.len() == self.target {
                let direction = ech.kernel_direction().ok_or(Abort::Overflow)?;
                if self.found.insert(direction) {
                    self.charge()?;
                }
                return Ok(());
            }
            let needed = self.target - chosen.len();
            for i in start..self.rows.len() {
                if self.rows.len() - i < needed {
                    break;
                }
                match ech.insert(&self.rows[i]) {
                    None => return Err(Abort::Overflow),
                    Some(false) => {}
                    Some(true) => {
                        chosen.push(i);
                        self.run(i + 1, chosen, ech)?;
                        chosen.pop();
                        ech.pop();
                    }
                }
            }
            Ok(())
        }
    }

    pub(super) fn try_enumerate(
        rows: &[&[BigInt]],
        dim: usize,
        cap: u64,
    ) -> Result<Option<BTreeSet<Vec<BigInt>>>> {
        let Some(rows) = to_i128_rows(rows) else {
            return Ok(None);
        };
        let mut enumerator = FastEnumerator {
            rows: &rows,
            target: dim - 1,
            cap,
            examined: 0,
            found: BTreeSet::new(),
        };
        let mut chosen = Vec::with_capacity(dim.saturating_sub(1));
        let mut ech = EchelonFast::new(dim);
        match enumerator.run(0, &mut chosen, &mut ech) {
            Ok(()) => Ok(Some(enumerator.found)),
            Err(Abort::Overflow) => Ok(None),
            Err(Abort::Cap(examined)) => Err(Error::ResourceLimit { examined, cap }),
        }
    }
}

pub(crate) fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x * y;
    }
    acc
}
