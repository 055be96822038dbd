//! Integral quadratic lattices given by a symmetric Gram matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::{
    determinant, lattice_basis, smith_normal_form, symmetric_inertia, Inertia, IntegerMatrix,
    MatrixError,
};

/// Search bound used by the bounded searches when the caller does not pick one.
pub const DEFAULT_SEARCH_BOUND: u32 = 5;

/// Largest rank accepted by [`is_isometric_definite`].
pub const MAX_ISOMETRY_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("invalid standard lattice: {0}")]
    InvalidStandard(String),
    #[error("twist by zero degenerates the form")]
    ZeroTwist,
    #[error("lattice is degenerate (determinant 0)")]
    Degenerate,
    #[error("lattice is not definite (inertia {0}); undecidable by this operation")]
    NotDefinite(Inertia),
    #[error("lattices are definite of opposite signs")]
    OppositeSigns,
    #[error("rank {rank} exceeds the supported limit {limit}")]
    RankLimit { rank: usize, limit: usize },
    #[error("search bound must be positive")]
    InvalidBound,
    #[error("inertia {found} is not that of a transcendental lattice (expected one or two positive directions and no kernel)")]
    WrongInertia { found: Inertia },
    #[error("picard number {rho} out of range 1..={max} for {surface}")]
    RhoOutOfRange { rho: i64, max: i64, surface: SurfaceKind },
}

/// Free ℤ-module of finite rank with a symmetric integral bilinear form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralLattice {
    gram: IntegerMatrix,
}

impl Serialize for IntegralLattice {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("IntegralLattice", 2)?;
        s.serialize_field("rank", &self.rank())?;
        s.serialize_field("gram", &self.gram)?;
        s.end()
    }
}

impl IntegralLattice {
    pub fn new(gram: IntegerMatrix) -> Result<Self, LatticeError> {
        gram.require_symmetric()?;
        Ok(Self { gram })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LatticeError> {
        Self::new(IntegerMatrix::from_rows(rows)?)
    }

    /// The rank-zero lattice.
    pub fn zero() -> Self {
        Self { gram: IntegerMatrix::zeros(0, 0) }
    }

    pub fn standard(kind: StandardLattice) -> Self {
        kind.lattice()
    }

    pub fn gram(&self) -> &IntegerMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn product(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        self.gram.bilinear(u, v)
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.gram.bilinear(v, v)
    }

    /// `L(n)`: same module, form multiplied by `n`.
    pub fn twist(&self, n: i64) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::ZeroTwist);
        }
        Ok(Self { gram: self.gram.scale(&BigInt::from(n)) })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self { gram: self.gram.block_diag(&other.gram) }
    }

    pub fn discriminant(&self) -> BigInt {
        determinant(&self.gram).expect("gram is square")
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    pub fn inertia(&self) -> Inertia {
        symmetric_inertia(&self.gram).expect("gram is symmetric")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Invariant factors of `L*/L` (Smith factors of the Gram matrix greater than one).
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>, LatticeError> {
        if !self.is_nondegenerate() {
            return Err(LatticeError::Degenerate);
        }
        let snf = smith_normal_form(&self.gram);
        Ok(snf.factors.into_iter().filter(|d| !d.is_one()).collect())
    }

    pub fn negated(&self) -> Self {
        Self { gram: self.gram.neg() }
    }

    /// The sublattice spanned by `basis` (given as coordinate vectors), with induced form.
    pub fn sublattice(&self, basis: &[Vec<BigInt>]) -> Self {
        let gram_entries = basis
            .iter()
            .flat_map(|u| basis.iter().map(move |v| (u, v)))
            .map(|(u, v)| self.product(u, v))
            .collect();
        let k = basis.len();
        Self { gram: IntegerMatrix::from_entries(k, k, gram_entries).expect("k*k entries") }
    }
}

impl fmt::Display for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gram)
    }
}

/// Named lattices: the hyperbolic plane and the ADE root lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardLattice {
    U,
    A(usize),
    D(usize),
    E(usize),
}

impl StandardLattice {
    pub fn validate(self) -> Result<Self, LatticeError> {
        let ok = match self {
            Self::U => true,
            Self::A(k) => k >= 1,
            Self::D(k) => k >= 4,
            Self::E(k) => (6..=8).contains(&k),
        };
        if ok {
            Ok(self)
        } else {
            Err(LatticeError::InvalidStandard(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Self::U => 2,
            Self::A(k) | Self::D(k) | Self::E(k) => k,
        }
    }

    /// Edges of the Dynkin diagram on nodes `0..rank`.
    fn dynkin_edges(self) -> Vec<(usize, usize)> {
        match self {
            Self::U => Vec::new(),
            Self::A(k) => (1..k).map(|i| (i - 1, i)).collect(),
            // chain 0..k-2, node k-1 attached to node k-3
            Self::D(k) => {
                let mut e: Vec<_> = (1..k - 1).map(|i| (i - 1, i)).collect();
                e.push((k - 3, k - 1));
                e
            }
            // chain 0..k-2, node k-1 attached to node 2
            Self::E(k) => {
                let mut e: Vec<_> = (1..k - 1).map(|i| (i - 1, i)).collect();
                e.push((2, k - 1));
                e
            }
        }
    }

    /// U is `[[0,1],[1,0]]`; root lattices are negative definite
    /// (diagonal −2, +1 for each Dynkin edge).
    pub fn lattice(self) -> IntegralLattice {
        if self == Self::U {
            return IntegralLattice::from_rows(&[[0, 1], [1, 0]]).unwrap();
        }
        let n = self.rank();
        let mut g = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            g.set(i, i, BigInt::from(-2));
        }
        for (a, b) in self.dynkin_edges() {
            g.set(a, b, BigInt::one());
            g.set(b, a, BigInt::one());
        }
        IntegralLattice { gram: g }
    }
}

impl fmt::Display for StandardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::U => write!(f, "U"),
            Self::A(k) => write!(f, "A{k}"),
            Self::D(k) => write!(f, "D{k}"),
            Self::E(k) => write!(f, "E{k}"),
        }
    }
}

impl FromStr for StandardLattice {
    type Err = LatticeError;

    /// Accepts `U`, `A3`, `A_3`, `D4`, `E8`, ... (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LatticeError::InvalidStandard(s.to_string());
        let t = s.trim();
        if t.eq_ignore_ascii_case("u") {
            return Ok(Self::U);
        }
        let mut chars = t.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let k: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        let kind = match family {
            'A' => Self::A(k),
            'D' => Self::D(k),
            'E' => Self::E(k),
            _ => return Err(bad()),
        };
        kind.validate()
    }
}

/// Parses a standard lattice name and builds its Gram matrix.
pub fn make_standard(name: &str) -> Result<IntegralLattice, LatticeError> {
    Ok(name.parse::<StandardLattice>()?.lattice())
}

/// A lattice vector (in the lattice's own coordinates) together with its norm.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ShortVector {
    #[serde(serialize_with = "serialize_big_vec")]
    pub coords: Vec<BigInt>,
    #[serde(serialize_with = "serialize_big")]
    pub norm: BigInt,
}

fn serialize_big<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    crate::exact::bigint_json(x).serialize(s)
}

fn serialize_big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<_> = v.iter().map(crate::exact::bigint_json).collect();
    vals.serialize(s)
}

/// Sign of a definite form: +1 positive definite, -1 negative definite.
fn definite_sign(l: &IntegralLattice) -> Result<i8, LatticeError> {
    let inertia = l.inertia();
    if inertia.is_positive_definite() {
        Ok(1)
    } else if inertia.is_negative_definite() {
        Ok(-1)
    } else {
        Err(LatticeError::NotDefinite(inertia))
    }
}

/// All vectors with `0 < |v·v| <= bound`, one per ±pair (first nonzero coordinate positive),
/// sorted by `|norm|` and then coordinates.
pub fn short_vectors(l: &IntegralLattice, bound: u64) -> Result<Vec<ShortVector>, LatticeError> {
    let sign = definite_sign(l)?;
    let mut out: Vec<ShortVector> = enumerate_positive(l, sign, bound)
        .into_iter()
        .filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()))
        .map(|coords| {
            let norm = l.norm(&coords);
            ShortVector { coords, norm }
        })
        .collect();
    out.sort_by(|a, b| a.norm.abs().cmp(&b.norm.abs()).then_with(|| a.coords.cmp(&b.coords)));
    Ok(out)
}

/// Every nonzero `x` with `sign · x·x <= bound` (both members of each ±pair).
///
/// Fincke–Pohst: write the positive form as `Σ dᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²` with
/// exact rational `dᵢ, μᵢⱼ` and enumerate coordinates from the last one down.
fn enumerate_positive(l: &IntegralLattice, sign: i8, bound: u64) -> Vec<Vec<BigInt>> {
    let n = l.rank();
    let s = BigInt::from(sign);
    let mut q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(l.gram.get(i, j) * &s))
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let qij = q[i][j].clone();
            q[j][i] = qij.clone();
            q[i][j] = qij / &q[i][i];
        }
        for k in i + 1..n {
            for m in k..n {
                let delta = &q[k][i] * &q[i][m];
                q[k][m] -= delta;
            }
        }
    }
    let mut found = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    let budget = BigRational::from_integer(BigInt::from(bound));
    if n > 0 {
        fincke_pohst_level(&q, n - 1, &budget, &mut x, &mut found);
    }
    found
}

fn fincke_pohst_level(
    q: &[Vec<BigRational>],
    level: usize,
    remaining: &BigRational,
    x: &mut Vec<BigInt>,
    found: &mut Vec<Vec<BigInt>>,
) {
    let n = q.len();
    let center: BigRational = (level + 1..n)
        .map(|j| &q[level][j] * BigRational::from_integer(x[j].clone()))
        .sum();
    let d = &q[level][level];
    let radius_sq = remaining / d;
    let radius: BigInt = radius_sq.floor().to_integer().sqrt();
    let lo: BigInt = (-&center).floor().to_integer() - &radius - 1;
    let hi: BigInt = (-&center).ceil().to_integer() + &radius + 1;
    let mut xi = lo;
    while xi <= hi {
        let shifted = BigRational::from_integer(xi.clone()) + &center;
        let cost = d * &shifted * &shifted;
        if cost <= *remaining {
            x[level] = xi.clone();
            let rest = remaining - &cost;
            if level == 0 {
                if x.iter().any(|c| !c.is_zero()) {
                    found.push(x.clone());
                }
            } else {
                fincke_pohst_level(q, level - 1, &rest, x, found);
            }
        }
        xi += 1;
    }
    x[level] = BigInt::zero();
}

/// Decides whether two definite lattices are isometric. Returns a verified basis change
/// `s` with `sᵀ·gram₁·s = gram₂` when they are.
pub fn is_isometric_definite(
    l1: &IntegralLattice,
    l2: &IntegralLattice,
) -> Result<Option<IntegerMatrix>, LatticeError> {
    let (s1, s2) = (definite_sign(l1)?, definite_sign(l2)?);
    for l in [l1, l2] {
        if l.rank() > MAX_ISOMETRY_RANK {
            return Err(LatticeError::RankLimit { rank: l.rank(), limit: MAX_ISOMETRY_RANK });
        }
    }
    if l1.rank() == 0 || l2.rank() == 0 {
        return Ok((l1.rank() == l2.rank()).then(|| IntegerMatrix::identity(0)));
    }
    if s1 != s2 {
        return Err(LatticeError::OppositeSigns);
    }
    if l1.rank() != l2.rank() || l1.discriminant() != l2.discriminant() {
        return Ok(None);
    }
    let n = l1.rank();
    if l1 == l2 {
        return Ok(Some(IntegerMatrix::identity(n)));
    }
    // search between reduced bases, then pull the certificate back: S = U1·S'·U2⁻¹
    let (r1, u1, _) = pair_reduce(l1.gram(), s1);
    let (r2, _, u2_inv) = pair_reduce(l2.gram(), s1);
    let reduced = IntegralLattice { gram: r1 };
    let Some(inner) = search_isometry(&reduced, &r2, s1) else {
        return Ok(None);
    };
    let s = u1.mul(&inner)?.mul(&u2_inv)?;
    let check = l1.gram.congruent(&s)?;
    assert_eq!(&check, l2.gram(), "isometry certificate failed verification");
    Ok(Some(s))
}

/// Greedy pairwise size reduction of a definite Gram matrix: `b_i ← b_i − q·b_j`
/// whenever that shortens `b_i`. Returns `(UᵀGU, U, U⁻¹)`.
pub(crate) fn pair_reduce(gram: &IntegerMatrix, sign: i8) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let n = gram.rows();
    let sign = BigInt::from(sign);
    let mut g = gram.scale(&sign);
    let (mut u, mut u_inv) = (IntegerMatrix::identity(n), IntegerMatrix::identity(n));
    let two = BigInt::from(2);
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (gij, gjj) = (g.get(i, j).clone(), g.get(j, j).clone());
                // nearest integer to gij / gjj (gjj > 0)
                let q = (&two * &gij + &gjj).div_floor(&(&two * &gjj));
                if q.is_zero() || (&two * gij.abs()) <= gjj {
                    continue;
                }
                let gii = g.get(i, i) - &two * &q * &gij + &q * &q * &gjj;
                for k in 0..n {
                    let v = g.get(i, k) - &q * g.get(j, k);
                    g.set(i, k, v.clone());
                    g.set(k, i, v);
                }
                g.set(i, i, gii);
                for r in 0..n {
                    let v = u.get(r, i) - &q * u.get(r, j);
                    u.set(r, i, v);
                    let w = u_inv.get(j, r) + &q * u_inv.get(i, r);
                    u_inv.set(j, r, w);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (g.scale(&sign), u, u_inv)
}

fn search_isometry(l1: &IntegralLattice, target: &IntegerMatrix, s1: i8) -> Option<IntegerMatrix> {
    let n = l1.rank();
    let sign = BigInt::from(s1);
    let max_norm = (0..n)
        .map(|i| (target.get(i, i) * &sign).to_u64().expect("definite diagonal fits u64"))
        .max()
        .unwrap_or(0);
    let pool: Vec<Candidate> = enumerate_positive(l1, s1, max_norm)
        .into_iter()
        .map(|v| {
            let image = l1.gram.apply(&v);
            let norm = l1.norm(&v);
            Candidate { v, image, norm }
        })
        .collect();
    let per_slot: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..pool.len()).filter(|&c| pool[c].norm == *target.get(i, i)).collect())
        .collect();

    let mut chosen = Vec::with_capacity(n);
    if !assign_slot(&pool, &per_slot, target, &mut chosen) {
        return None;
    }
    let mut s = IntegerMatrix::zeros(n, n);
    for (col, &c) in chosen.iter().enumerate() {
        for (row, x) in pool[c].v.iter().enumerate() {
            s.set(row, col, x.clone());
        }
    }
    Some(s)
}

struct Candidate {
    v: Vec<BigInt>,
    image: Vec<BigInt>,
    norm: BigInt,
}

fn assign_slot(
    pool: &[Candidate],
    per_slot: &[Vec<usize>],
    target: &IntegerMatrix,
    chosen: &mut Vec<usize>,
) -> bool {
    let slot = chosen.len();
    if slot == per_slot.len() {
        return true;
    }
    for &c in &per_slot[slot] {
        let fits = chosen.iter().enumerate().all(|(j, &prev)| {
            let dot: BigInt = pool[c].image.iter().zip(&pool[prev].v).map(|(a, b)| a * b).sum();
            dot == *target.get(slot, j)
        });
        if fits {
            chosen.push(c);
            if assign_slot(pool, per_slot, target, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Invariants compared when isometry cannot be decided (indefinite input).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantComparison {
    pub rank: bool,
    pub inertia: bool,
    pub parity: bool,
    pub discriminant_group: bool,
    /// Always true: agreement of these invariants does not prove isometry.
    pub inconclusive: bool,
}

impl InvariantComparison {
    pub fn all_agree(&self) -> bool {
        self.rank && self.inertia && self.parity && self.discriminant_group
    }
}

pub fn compare_invariants(l1: &IntegralLattice, l2: &IntegralLattice) -> InvariantComparison {
    let dg = |l: &IntegralLattice| l.discriminant_group().ok();
    InvariantComparison {
        rank: l1.rank() == l2.rank(),
        inertia: l1.inertia() == l2.inertia(),
        parity: l1.is_even() == l2.is_even(),
        discriminant_group: dg(l1) == dg(l2),
        inconclusive: true,
    }
}

/// Vectors `e, f` spanning a copy of `U`, and the orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicSplit {
    pub e: Vec<BigInt>,
    pub f: Vec<BigInt>,
    /// Basis of `⟨e,f⟩^⊥` in the ambient coordinates.
    pub complement_basis: Vec<Vec<BigInt>>,
    pub complement: IntegralLattice,
}

impl Serialize for HyperbolicSplit {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let vec = |v: &[BigInt]| v.iter().map(crate::exact::bigint_json).collect::<Vec<_>>();
        let mut s = serializer.serialize_struct("HyperbolicSplit", 3)?;
        s.serialize_field("e", &vec(&self.e))?;
        s.serialize_field("f", &vec(&self.f))?;
        s.serialize_field("complement", &self.complement)?;
        s.end()
    }
}

/// Searches `|coords| <= search_bound` for a primitive isotropic `e` that completes
/// to a hyperbolic pair. Absence within the bound proves nothing.
///
/// For a fixed `e` the completion is decided exactly: `f` exists iff `e·L = ℤ` and
/// some `f₁` with `e·f₁ = 1` has even norm, in which case `f = f₁ − (f₁·f₁/2)·e`.
pub fn find_hyperbolic_summand(
    l: &IntegralLattice,
    search_bound: u32,
) -> Result<Option<HyperbolicSplit>, LatticeError> {
    if search_bound == 0 {
        return Err(LatticeError::InvalidBound);
    }
    if !l.is_nondegenerate() {
        return Err(LatticeError::Degenerate);
    }
    let n = l.rank();
    if n < 2 || l.inertia().is_definite() {
        return Ok(None);
    }
    let form = QuickForm::new(l);
    let b = search_bound as i64;
    for shell in 1..=b {
        let mut x = vec![-shell; n];
        loop {
            if x.iter().any(|c| c.abs() == shell)
                && x.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
                && form.is_isotropic(&x)
                && gcd_all(&x) == 1
            {
                let e: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
                if let Some(split) = complete_hyperbolic_pair(l, e) {
                    return Ok(Some(split));
                }
            }
            if !odometer(&mut x, shell) {
                break;
            }
        }
    }
    Ok(None)
}

/// Quadratic form evaluation with an `i128` fast path.
struct QuickForm<'a> {
    lattice: &'a IntegralLattice,
    small: Option<Vec<Vec<i64>>>,
}

impl<'a> QuickForm<'a> {
    fn new(lattice: &'a IntegralLattice) -> Self {
        let limit = 1i64 << 40;
        let small = lattice
            .gram
            .to_i64_rows()
            .filter(|rows| rows.iter().flatten().all(|x| x.abs() < limit));
        Self { lattice, small }
    }

    fn is_isotropic(&self, x: &[i64]) -> bool {
        match &self.small {
            Some(g) => {
                let mut acc: i128 = 0;
                for (i, gi) in g.iter().enumerate() {
                    if x[i] == 0 {
                        continue;
                    }
                    let row: i128 = gi.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum();
                    acc += x[i] as i128 * row;
                }
                acc == 0
            }
            None => {
                let v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
                self.lattice.norm(&v).is_zero()
            }
        }
    }
}

fn odometer(x: &mut [i64], bound: i64) -> bool {
    for c in x.iter_mut().rev() {
        if *c < bound {
            *c += 1;
            return true;
        }
        *c = -bound;
    }
    false
}

fn gcd_all(x: &[i64]) -> i64 {
    x.iter().fold(0i64, |g, &c| g.gcd(&c))
}

fn complete_hyperbolic_pair(l: &IntegralLattice, e: Vec<BigInt>) -> Option<HyperbolicSplit> {
    let n = l.rank();
    // w = G e; need w·f = 1
    let w = l.gram.apply(&e);
    let row = IntegerMatrix::from_entries(1, n, w.clone()).unwrap();
    let snf = smith_normal_form(&row);
    if !snf.factors[0].is_one() {
        return None;
    }
    // left · w · right = (1,0,..,0), left = ±1
    let unit = snf.left.get(0, 0).clone();
    let mut f1: Vec<BigInt> = snf.right.column(0).into_iter().map(|x| x * &unit).collect();
    if l.norm(&f1).is_odd() {
        // Kernel of w is spanned by the remaining columns; one of odd norm fixes parity.
        let odd = (1..n).map(|j| snf.right.column(j)).find(|k| l.norm(k).is_odd())?;
        f1.iter_mut().zip(&odd).for_each(|(a, b)| *a += b);
    }
    let half = l.norm(&f1) / 2;
    let f: Vec<BigInt> = f1.iter().zip(&e).map(|(a, b)| a - &half * b).collect();
    debug_assert!(l.norm(&f).is_zero() && l.product(&e, &f).is_one());

    // Projection onto ⟨e,f⟩^⊥: x ↦ x − (x·f)e − (x·e)f
    let projected: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut x = vec![BigInt::zero(); n];
            x[i] = BigInt::one();
            let xf = l.product(&x, &f);
            let xe = l.product(&x, &e);
            x.iter()
                .zip(e.iter().zip(&f))
                .map(|(xi, (ei, fi))| xi - &xf * ei - &xe * fi)
                .collect()
        })
        .collect();
    let complement_basis = lattice_basis(&projected);
    debug_assert_eq!(complement_basis.len(), n - 2);
    let complement = l.sublattice(&complement_basis);
    Some(HyperbolicSplit { e, f, complement_basis, complement })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MorrisonVerdict {
    /// ρ = 19
    CaseIRho19,
    /// ρ = 20
    CaseIRho20,
    /// ρ = 18, T = U ⊕ T'
    CaseIiUSummand,
    /// ρ = 17, T = U² ⊕ T'
    CaseIiiU2Summand,
    NotClassified { bound: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotClassifiedReason {
    /// No hyperbolic split found within the search bound.
    SearchExhausted,
    /// ρ ≤ 16: none of the three conditions can hold.
    PicardTooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorrisonClass {
    pub verdict: MorrisonVerdict,
    pub picard_number: i64,
    pub complement: Option<IntegralLattice>,
    pub reason: Option<NotClassifiedReason>,
    /// True iff the inertia is exactly (2, rank − 2, 0).
    pub k3_signature: bool,
}

impl fmt::Display for MorrisonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tp = self.complement.as_ref().map(|c| c.to_string()).unwrap_or_default();
        match self.verdict {
            MorrisonVerdict::CaseIRho19 | MorrisonVerdict::CaseIRho20 => {
                write!(f, "Case (i): ρ(X) = 19 or 20 (ρ = {})", self.picard_number)
            }
            MorrisonVerdict::CaseIiUSummand => write!(f, "Case (ii): T = U ⊕ T', T' = {tp}"),
            MorrisonVerdict::CaseIiiU2Summand => write!(f, "Case (iii): T = U^2 ⊕ T', T' = {tp}"),
            MorrisonVerdict::NotClassified { bound } => write!(f, "NotClassified({bound})"),
        }
    }
}

/// Places a candidate transcendental lattice into Morrison's three cases
/// (ρ = 22 − rank), using bounded hyperbolic-split searches for ρ = 18 and 17.
pub fn morrison_classify(t: &IntegralLattice, search_bound: u32) -> Result<MorrisonClass, LatticeError> {
    if search_bound == 0 {
        return Err(LatticeError::InvalidBound);
    }
    let inertia = t.inertia();
    if inertia.zero != 0 || !(1..=2).contains(&inertia.positive) || t.rank() > 21 {
        return Err(LatticeError::WrongInertia { found: inertia });
    }
    let rank = t.rank();
    let picard_number = 22 - rank as i64;
    let mut class = MorrisonClass {
        verdict: MorrisonVerdict::NotClassified { bound: search_bound },
        picard_number,
        complement: None,
        reason: None,
        k3_signature: inertia.positive == 2,
    };
    match picard_number {
        20 => class.verdict = MorrisonVerdict::CaseIRho20,
        19 => class.verdict = MorrisonVerdict::CaseIRho19,
        18 => match find_hyperbolic_summand(t, search_bound)? {
            Some(split) => {
                class.verdict = MorrisonVerdict::CaseIiUSummand;
                class.complement = Some(split.complement);
            }
            None => class.reason = Some(NotClassifiedReason::SearchExhausted),
        },
        17 => {
            let second = find_hyperbolic_summand(t, search_bound)?
                .map(|first| find_hyperbolic_summand(&first.complement, search_bound))
                .transpose()?
                .flatten();
            match second {
                Some(split) => {
                    class.verdict = MorrisonVerdict::CaseIiiU2Summand;
                    class.complement = Some(split.complement);
                }
                None => class.reason = Some(NotClassifiedReason::SearchExhausted),
            }
        }
        _ => class.reason = Some(NotClassifiedReason::PicardTooSmall),
    }
    Ok(class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Abelian,
    K3,
}

impl SurfaceKind {
    pub fn second_betti(self) -> i64 {
        match self {
            Self::Abelian => 6,
            Self::K3 => 22,
        }
    }

    pub fn max_picard(self) -> i64 {
        self.second_betti() - 2
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Abelian => "abelian",
            Self::K3 => "k3",
        })
    }
}

impl FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "abelian" => Ok(Self::Abelian),
            "k3" => Ok(Self::K3),
            _ => Err(format!("unknown surface kind '{s}' (expected abelian or k3)")),
        }
    }
}

/// Whether `t` can be the transcendental lattice of a surface of the given kind
/// with Picard number `rho`: rank `b₂ − ρ` and inertia `(2, rank − 2, 0)`.
pub fn transcendental_consistency(
    t: &IntegralLattice,
    surface: SurfaceKind,
    rho: i64,
) -> Result<bool, LatticeError> {
    let max = surface.max_picard();
    if !(1..=max).contains(&rho) {
        return Err(LatticeError::RhoOutOfRange { rho, max, surface });
    }
    let expected_rank = (surface.second_betti() - rho) as usize;
    if t.rank() != expected_rank {
        return Ok(false);
    }
    Ok(t.inertia() == Inertia::new(2, expected_rank - 2, 0))
}
