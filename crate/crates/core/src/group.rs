//! Finite groups as explicit multiplication tables.
//!
//! The catalog holds the seven groups that can produce generalized Kummer
//! surfaces: `Z2, Z3, Z4, Z6, Q8, Q12, T24`. Everything is a table scan; orders
//! never exceed 24.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown group '{0}' (expected one of Z2, Z3, Z4, Z6, Q8, Q12, T24)")]
    UnknownGroup(String),
    #[error("table is not a group: {0}")]
    InvalidTable(String),
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("group is not from the catalog")]
    NotCatalog,
}

/// Names of the catalog groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupName {
    Z2,
    Z3,
    Z4,
    Z6,
    Q8,
    Q12,
    T24,
}

impl GroupName {
    pub const ALL: [GroupName; 7] = [
        GroupName::Z2,
        GroupName::Z3,
        GroupName::Z4,
        GroupName::Z6,
        GroupName::Q8,
        GroupName::Q12,
        GroupName::T24,
    ];

    pub fn order(self) -> usize {
        match self {
            Self::Z2 => 2,
            Self::Z3 => 3,
            Self::Z4 => 4,
            Self::Z6 => 6,
            Self::Q8 => 8,
            Self::Q12 => 12,
            Self::T24 => 24,
        }
    }

    pub fn is_cyclic(self) -> bool {
        matches!(self, Self::Z2 | Self::Z3 | Self::Z4 | Self::Z6)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Z2 => "Z2",
            Self::Z3 => "Z3",
            Self::Z4 => "Z4",
            Self::Z6 => "Z6",
            Self::Q8 => "Q8",
            Self::Q12 => "Q12",
            Self::T24 => "T24",
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupName {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('_', "");
        Self::ALL
            .into_iter()
            .find(|g| g.as_str() == norm)
            .ok_or_else(|| GroupError::UnknownGroup(s.to_string()))
    }
}

/// A finite group given by its full multiplication table.
///
/// `table[a][b]` is the index of `a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    catalog: Option<GroupName>,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

impl FiniteGroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        let invalid = |m: String| Err(GroupError::InvalidTable(m));
        if n == 0 {
            return invalid("empty table".into());
        }
        if names.len() != n {
            return invalid(format!("{} names for {n} elements", names.len()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return invalid("table is not closed".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return invalid("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return invalid(format!("element {} has no inverse", names[a])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return invalid(format!(
                            "associativity fails for ({}, {}, {})",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }
        let orders = (0..n)
            .map(|g| {
                let mut k = 1;
                let mut x = g;
                while x != identity {
                    x = table[x][g];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Self { catalog: None, names, table, identity, inverses, orders })
    }

    pub fn catalog_name(&self) -> Option<GroupName> {
        self.catalog
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    /// `x⁻¹ g x`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inverse(x), g), x)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&k| k == self.order())
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut members: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { elements: members.into_iter().collect() }
    }

    /// Checks closure of a set of element indices and returns it as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        if let Some(&bad) = elements.iter().find(|&&g| g >= self.order()) {
            return Err(GroupError::BadElement(bad));
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.is_empty() || !set.contains(&self.identity) {
            return Err(GroupError::NotSubgroup);
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        Ok(Subgroup { elements: set.into_iter().collect() })
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = h.elements.iter().map(|&g| self.conjugate(g, x)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// All elements `x` with `x⁻¹ H x = H`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elements = (0..self.order()).filter(|&x| self.conjugate_subgroup(h, x) == *h).collect();
        Subgroup { elements }
    }

    pub fn center(&self) -> Subgroup {
        let n = self.order();
        let elements = (0..n).filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z))).collect();
        Subgroup { elements }
    }

    /// Conjugacy classes, sorted by element order, then size, then smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|x| self.conjugate(g, x)).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by_key(|c| (self.element_order(c[0]), c.len(), c[0]));
        classes
    }

    /// Every subgroup, found by repeatedly adjoining single elements starting from
    /// the trivial group. Sorted by order, then element set.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let trivial = self.generate(&[]);
        let mut seen: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.elements.clone();
                gens.push(g);
                let k = self.generate(&gens);
                if seen.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut all: Vec<Subgroup> = seen.into_iter().collect();
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        all
    }

    /// Conjugacy classes of subgroups; each class as its sorted member list
    /// (the first member is the canonical representative).
    pub fn subgroup_classes(&self) -> Vec<Vec<Subgroup>> {
        let mut remaining = self.all_subgroups();
        let mut classes = Vec::new();
        while !remaining.is_empty() {
            let h = remaining.remove(0);
            let conj: BTreeSet<Subgroup> = (0..self.order()).map(|x| self.conjugate_subgroup(&h, x)).collect();
            remaining.retain(|k| !conj.contains(k));
            classes.push(conj.into_iter().collect());
        }
        classes
    }

    /// Conjugacy classes of nontrivial cyclic subgroups.
    pub fn cyclic_subgroup_classes(&self) -> Vec<CyclicSubgroupClass> {
        self.subgroup_classes()
            .into_iter()
            .filter(|class| class[0].order() > 1 && self.subgroup_is_cyclic(&class[0]))
            .map(|class| {
                let representative = class[0].clone();
                let generator = representative
                    .elements
                    .iter()
                    .copied()
                    .find(|&g| self.element_order(g) == representative.order())
                    .expect("cyclic");
                CyclicSubgroupClass {
                    order: representative.order(),
                    generator,
                    class_size: class.len(),
                    normalizer_order: self.normalizer(&representative).order(),
                    representative,
                }
            })
            .collect()
    }

    pub fn subgroup_is_cyclic(&self, h: &Subgroup) -> bool {
        h.elements.iter().any(|&g| self.element_order(g) == h.order())
    }

    /// Isomorphism type of `h` if it is one of the stabilizer types.
    ///
    /// Within these groups the types are separated by order, cyclicity and the
    /// number of involutions (binary polyhedral groups have exactly one).
    pub fn stabilizer_kind(&self, h: &Subgroup) -> Option<StabilizerKind> {
        let involutions = h.elements.iter().filter(|&&g| self.element_order(g) == 2).count();
        let max_order = h.elements.iter().map(|&g| self.element_order(g)).max().unwrap_or(1);
        match (h.order(), self.subgroup_is_cyclic(h)) {
            (2, true) => Some(StabilizerKind::Z2),
            (3, true) => Some(StabilizerKind::Z3),
            (4, true) => Some(StabilizerKind::Z4),
            (6, true) => Some(StabilizerKind::Z6),
            (8, false) if involutions == 1 && max_order == 4 => Some(StabilizerKind::Q8),
            (12, false) if involutions == 1 && max_order == 6 => Some(StabilizerKind::Q12),
            (24, false) if involutions == 1 && max_order == 6 => Some(StabilizerKind::T24),
            _ => None,
        }
    }

    /// Conjugacy classes of subgroups of stabilizer type, tagged with their index
    /// and induced singularity. Sorted by kind, then canonical representative.
    pub fn stabilizer_classes(&self) -> Result<Vec<StabilizerClass>, GroupError> {
        if self.catalog.is_none() {
            return Err(GroupError::NotCatalog);
        }
        let mut out: Vec<StabilizerClass> = self
            .subgroup_classes()
            .into_iter()
            .filter_map(|class| {
                let rep = class[0].clone();
                self.stabilizer_kind(&rep).map(|kind| StabilizerClass {
                    kind,
                    index_m: self.order() / rep.order(),
                    sing_type: kind.singularity(),
                    class_size: class.len(),
                    subgroup: rep,
                })
            })
            .collect();
        out.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.subgroup.elements.cmp(&b.subgroup.elements)));
        Ok(out)
    }

    /// Number of cosets `xH` with `x⁻¹ g x ∈ H`, i.e. points of `G/H` fixed by `g`.
    pub fn fixed_cosets(&self, g: usize, h: &Subgroup) -> Result<usize, GroupError> {
        if g >= self.order() {
            return Err(GroupError::BadElement(g));
        }
        let h = self.subgroup(&h.elements)?;
        let mut covered = vec![false; self.order()];
        let mut count = 0;
        for x in 0..self.order() {
            if covered[x] {
                continue;
            }
            for &k in &h.elements {
                covered[self.mul(x, k)] = true;
            }
            if h.contains(self.conjugate(g, x)) {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// A subgroup as its sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicSubgroupClass {
    pub order: usize,
    pub generator: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub representative: Subgroup,
}

/// Isomorphism types of point stabilizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StabilizerKind {
    Z2,
    Z3,
    Z4,
    Z6,
    Q8,
    Q12,
    T24,
}

impl StabilizerKind {
    pub fn singularity(self) -> crate::kummer::SingularityType {
        use crate::kummer::SingularityType as S;
        match self {
            Self::Z2 => S::A1,
            Self::Z3 => S::A2,
            Self::Z4 => S::A3,
            Self::Z6 => S::A5,
            Self::Q8 => S::D4,
            Self::Q12 => S::D5,
            Self::T24 => S::E6,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Self::Z2 => 2,
            Self::Z3 => 3,
            Self::Z4 => 4,
            Self::Z6 => 6,
            Self::Q8 => 8,
            Self::Q12 => 12,
            Self::T24 => 24,
        }
    }
}

impl fmt::Display for StabilizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Z2 => "Z2",
            Self::Z3 => "Z3",
            Self::Z4 => "Z4",
            Self::Z6 => "Z6",
            Self::Q8 => "Q8",
            Self::Q12 => "Q12",
            Self::T24 => "T24",
        };
        f.write_str(s)
    }
}

/// One conjugacy class of stabilizer subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerClass {
    pub subgroup: Subgroup,
    pub kind: StabilizerKind,
    /// `[G : H]`
    pub index_m: usize,
    pub sing_type: crate::kummer::SingularityType,
    /// Number of subgroups conjugate to the representative.
    pub class_size: usize,
}

pub fn build_group(name: GroupName) -> FiniteGroupTable {
    let (names, table) = match name {
        GroupName::Z2 => cyclic(2),
        GroupName::Z3 => cyclic(3),
        GroupName::Z4 => cyclic(4),
        GroupName::Z6 => cyclic(6),
        GroupName::Q8 => dicyclic(2),
        GroupName::Q12 => dicyclic(3),
        GroupName::T24 => binary_tetrahedral(),
    };
    let mut g = FiniteGroupTable::new(names, table).expect("catalog tables are groups");
    g.catalog = Some(name);
    g
}

fn cyclic(k: usize) -> (Vec<String>, Vec<Vec<usize>>) {
    let names = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    (names, table)
}

/// `Q_{4m} = ⟨a, b | a^{2m} = 1, b² = a^m, b a b⁻¹ = a⁻¹⟩`, elements `a^i b^e`
/// stored at index `e·2m + i`.
fn dicyclic(m: usize) -> (Vec<String>, Vec<Vec<usize>>) {
    let n = 2 * m;
    let power = |i: usize| match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    let names = (0..2 * n)
        .map(|idx| {
            let (e, i) = (idx / n, idx % n);
            match (e, i) {
                (0, 0) => "1".to_string(),
                (0, _) => power(i),
                (_, 0) => "b".to_string(),
                _ => format!("{}b", power(i)),
            }
        })
        .collect();
    // a^i b^e · a^j b^f = a^{i ± j} b^{e+f}, with b a^j = a^{-j} b and b² = a^m
    let mul = |x: usize, y: usize| {
        let (e, i) = (x / n, x % n);
        let (f, j) = (y / n, y % n);
        let k = if e == 0 { (i + j) % n } else { (i + n - j) % n };
        if e + f == 2 {
            (k + m) % n
        } else {
            (e + f) * n + k
        }
    };
    let table = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
    (names, table)
}

/// Quaternion with coordinates doubled, so Hurwitz units have integer entries.
type DoubledQuaternion = [i64; 4];

fn quaternion_product(p: DoubledQuaternion, q: DoubledQuaternion) -> DoubledQuaternion {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    // (p/2)(q/2) = pq/4, doubled: pq/2
    [
        (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) / 2,
        (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) / 2,
        (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) / 2,
        (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) / 2,
    ]
}

fn quaternion_name(q: DoubledQuaternion) -> String {
    const UNITS: [&str; 4] = ["1", "i", "j", "k"];
    if let Some(pos) = q.iter().position(|&c| c != 0).filter(|_| q.iter().filter(|&&c| c != 0).count() == 1) {
        let sign = if q[pos] < 0 { "-" } else { "" };
        return format!("{sign}{}", UNITS[pos]);
    }
    let mut s = String::from("(");
    for (idx, (&c, unit)) in q.iter().zip(UNITS).enumerate() {
        let sign = if c < 0 { "-" } else if idx > 0 { "+" } else { "" };
        s.push_str(sign);
        s.push_str(unit);
    }
    s.push_str(")/2");
    s
}

/// The 24 Hurwitz units `±1, ±i, ±j, ±k, (±1±i±j±k)/2`.
fn binary_tetrahedral() -> (Vec<String>, Vec<Vec<usize>>) {
    let mut elems: Vec<DoubledQuaternion> = Vec::with_capacity(24);
    for axis in 0..4 {
        for sign in [2, -2] {
            let mut q = [0; 4];
            q[axis] = sign;
            elems.push(q);
        }
    }
    for bits in 0..16u32 {
        let q = std::array::from_fn(|i| if bits >> (3 - i) & 1 == 0 { 1 } else { -1 });
        elems.push(q);
    }
    let index = |q: DoubledQuaternion| elems.iter().position(|&e| e == q).expect("closed");
    let table = elems
        .iter()
        .map(|&p| elems.iter().map(|&q| index(quaternion_product(p, q))).collect())
        .collect();
    let names = elems.iter().map(|&q| quaternion_name(q)).collect();
    (names, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_census(g: &FiniteGroupTable) -> Vec<usize> {
        let mut v: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn q8_order_census() {
        let g = build_group(GroupName::Q8);
        assert_eq!(g.order(), 8);
        let census = order_census(&g);
        assert_eq!(census.iter().filter(|&&k| k == 4).count(), 6);
        assert_eq!(census.iter().filter(|&&k| k == 2).count(), 1);
    }

    #[test]
    fn z6_orders() {
        let g = build_group(GroupName::Z6);
        assert!(g.is_cyclic() && g.is_abelian());
        assert_eq!(order_census(&g), vec![1, 2, 3, 3, 6, 6]);
    }

    #[test]
    fn t24_center_and_q8() {
        let g = build_group(GroupName::T24);
        assert_eq!(g.order(), 24);
        assert_eq!(g.center().order(), 2);
        let q8s: Vec<_> = g
            .all_subgroups()
            .into_iter()
            .filter(|h| g.stabilizer_kind(h) == Some(StabilizerKind::Q8))
            .collect();
        assert_eq!(q8s.len(), 1);
        assert_eq!(g.name(0), "1");
        assert_eq!(g.name(1), "-1");
        assert_eq!(g.name(8), "(1+i+j+k)/2");
        assert_eq!(g.name(23), "(-1-i-j-k)/2");
    }

    #[test]
    fn dicyclic_names_and_relations() {
        let g = build_group(GroupName::Q12);
        let a = g.element("a").unwrap();
        let b = g.element("b").unwrap();
        assert_eq!(g.element_order(a), 6);
        assert_eq!(g.mul(b, b), g.element("a^3").unwrap());
        // b a b^-1 = a^-1
        assert_eq!(g.mul(g.mul(b, a), g.inverse(b)), g.inverse(a));
        assert_eq!(g.name(g.mul(a, b)), "ab");
    }

    #[test]
    fn conjugacy_class_examples() {
        let sizes = |name| build_group(name).conjugacy_classes().iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(sizes(GroupName::Q8), vec![1, 1, 2, 2, 2]);
        assert_eq!(sizes(GroupName::Z4), vec![1, 1, 1, 1]);
        assert_eq!(sizes(GroupName::T24), vec![1, 1, 4, 4, 6, 4, 4]);
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let summary = |name| {
            build_group(name)
                .cyclic_subgroup_classes()
                .iter()
                .map(|c| (c.order, c.normalizer_order))
                .collect::<Vec<_>>()
        };
        assert_eq!(summary(GroupName::Q8), vec![(2, 8), (4, 8), (4, 8), (4, 8)]);
        assert_eq!(summary(GroupName::Q12), vec![(2, 12), (3, 12), (4, 4), (6, 12)]);
        assert_eq!(summary(GroupName::Z3), vec![(3, 3)]);
    }

    fn stabilizer_summary(name: GroupName) -> Vec<(StabilizerKind, usize, &'static str)> {
        build_group(name)
            .stabilizer_classes()
            .unwrap()
            .iter()
            .map(|c| (c.kind, c.index_m, c.sing_type.label()))
            .collect()
    }

    #[test]
    fn stabilizer_class_examples() {
        use StabilizerKind::*;
        assert_eq!(
            stabilizer_summary(GroupName::Q8),
            vec![(Z2, 4, "A1"), (Z4, 2, "A3"), (Z4, 2, "A3"), (Z4, 2, "A3"), (Q8, 1, "D4")]
        );
        assert_eq!(stabilizer_summary(GroupName::Z2), vec![(Z2, 1, "A1")]);
        assert_eq!(
            stabilizer_summary(GroupName::T24),
            vec![(Z2, 12, "A1"), (Z3, 8, "A2"), (Z4, 6, "A3"), (Z6, 4, "A5"), (Q8, 3, "D4"), (T24, 1, "E6")]
        );
    }

    #[test]
    fn no_klein_four_subgroups() {
        for name in [GroupName::Q8, GroupName::Q12, GroupName::T24] {
            let g = build_group(name);
            let klein = g
                .all_subgroups()
                .into_iter()
                .filter(|h| h.order() == 4 && !g.subgroup_is_cyclic(h))
                .count();
            assert_eq!(klein, 0, "{name}");
        }
    }

    #[test]
    fn fixed_coset_examples() {
        let q8 = build_group(GroupName::Q8);
        let z = q8.element("a^2").unwrap();
        let i = q8.element("a").unwrap();
        let center = q8.center();
        let gen_i = q8.generate(&[i]);
        assert_eq!(q8.fixed_cosets(z, &gen_i).unwrap(), 2);
        assert_eq!(q8.fixed_cosets(i, &center).unwrap(), 0);

        let q12 = build_group(GroupName::Q12);
        let u = q12.element("b").unwrap();
        assert_eq!(q12.element_order(u), 4);
        assert_eq!(q12.fixed_cosets(u, &q12.generate(&[u])).unwrap(), 1);
    }

    #[test]
    fn fixed_cosets_rejects_non_subgroup() {
        let q8 = build_group(GroupName::Q8);
        let not_closed = Subgroup { elements: vec![0, 1] };
        assert_eq!(q8.fixed_cosets(0, &not_closed), Err(GroupError::NotSubgroup));
    }

    #[test]
    fn invalid_tables_rejected() {
        let names = vec!["e".to_string(), "x".to_string()];
        let no_inverse = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroupTable::new(names.clone(), no_inverse), Err(GroupError::InvalidTable(_))));
        let open = vec![vec![0, 2], vec![1, 0]];
        assert!(matches!(FiniteGroupTable::new(names, open), Err(GroupError::InvalidTable(_))));
        // a valid table that is not from the catalog
        let names = vec!["e".to_string(), "x".to_string()];
        let g = FiniteGroupTable::new(names, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.stabilizer_classes(), Err(GroupError::NotCatalog));
    }

    #[test]
    fn parse_group_names() {
        assert_eq!("q12".parse::<GroupName>().unwrap(), GroupName::Q12);
        assert_eq!("T_24".parse::<GroupName>().unwrap(), GroupName::T24);
        assert!(matches!("Z5".parse::<GroupName>(), Err(GroupError::UnknownGroup(_))));
    }
}
