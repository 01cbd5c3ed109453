//! Finite permutation groups, class functions, and character tables.
//!
//! Groups are closed from generators by brute force and carry their full
//! element list, conjugacy classes, and exponent. Class functions store
//! one cyclotomic value per conjugacy class; a detached "scalar" class
//! function acts as a constant multiple of the trivial character on any
//! group, which lets polynomials and series over class functions embed
//! rational scalars.

use crate::cyclotomic::Cyclotomic;
use crate::rational::Rational;
use crate::ring::Ring;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;

/// Default cap on the order of a closed group; every group in scope here
/// has order at most 48, the cap guards against non-terminating closure.
pub const DEFAULT_ORDER_CAP: usize = 10_080;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    OrderCapExceeded,
    GroupMismatch,
    NotASubgroup,
    OutOfRange,
    DegreeMismatch,
    NotCyclic,
    NotElementaryAbelian2,
    InvalidTable(&'static str),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::OrderCapExceeded => write!(f, "group closure exceeded the order cap"),
            GroupError::GroupMismatch => write!(f, "class functions belong to different groups"),
            GroupError::NotASubgroup => write!(f, "elements do not form a subgroup of the parent"),
            GroupError::OutOfRange => write!(f, "parameter out of supported range"),
            GroupError::DegreeMismatch => write!(f, "permutation degrees do not match"),
            GroupError::NotCyclic => write!(f, "group is not cyclic of the requested order"),
            GroupError::NotElementaryAbelian2 => {
                write!(f, "group is not an elementary abelian 2-group")
            }
            GroupError::InvalidTable(msg) => write!(f, "invalid character table: {msg}"),
        }
    }
}

/// Permutation of {0, 1, …, n-1}, stored as the image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition acting left-to-right on points: (a∘b)(i) = a(b(i)).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let mut k = 1u64;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Cycles (including fixed points), each starting at its least
    /// element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths sorted descending (a partition of the degree).
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{:?}", self.images)
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// index into the group's element list; the least member
    pub representative: usize,
    pub size: usize,
    pub members: Vec<usize>,
}

/// Finite permutation group with full element enumeration.
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: BTreeMap<Vec<usize>, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    exponent: u64,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(degree={}, order={}, classes={})",
            self.degree,
            self.elements.len(),
            self.classes.len()
        )
    }
}

impl FiniteGroup {
    /// Closes the generators into a full group; elements are sorted by
    /// image vector so the identity is element 0 and the identity class
    /// is class 0.
    pub fn close(
        degree: usize,
        generators: &[Permutation],
        order_cap: usize,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch);
            }
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        set.insert(Permutation::identity(degree).images.to_vec());
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = g.compose(&p);
                if set.insert(q.images.clone()) {
                    if set.len() > order_cap {
                        return Err(GroupError::OrderCapExceeded);
                    }
                    frontier.push(q);
                }
            }
        }
        let elements: Vec<Permutation> =
            set.into_iter().map(|images| Permutation { images }).collect();
        let index: BTreeMap<Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.images.clone(), i)).collect();

        // conjugacy classes by brute-force conjugation
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = Vec::new();
            for h in &elements {
                let conj = h.compose(&elements[i]).compose(&h.inverse());
                let j = index[&conj.images];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: members[0], size: members.len(), members });
        }
        let exponent = elements.iter().map(|p| p.order()).fold(1u64, num_integer::lcm);
        let g = FiniteGroup { degree, elements, index, classes, class_of, exponent };
        debug_assert!(g.elements[0].is_identity());
        debug_assert_eq!(g.class_of[0], 0);
        debug_assert_eq!(g.order(), g.classes.iter().map(|c| c.size).sum::<usize>());
        Ok(Arc::new(g))
    }

    pub fn trivial(degree: usize) -> Arc<FiniteGroup> {
        Self::close(degree, &[], DEFAULT_ORDER_CAP).expect("trivial group")
    }

    /// Cyclic group generated by the n-cycle (0 1 … n-1).
    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let gen = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        Self::close(n, &[gen], DEFAULT_ORDER_CAP.max(n + 1)).expect("cyclic group")
    }

    /// Symmetric group on n points in its natural action.
    pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
        if n == 0 || n > 8 {
            return Err(GroupError::OutOfRange);
        }
        if n == 1 {
            return Ok(Self::trivial(1));
        }
        let mut transposition: Vec<usize> = (0..n).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let gens = vec![
            Permutation::from_images(transposition).unwrap(),
            Permutation::from_images(cycle).unwrap(),
        ];
        let mut fact = 1usize;
        for k in 2..=n {
            fact *= k;
        }
        Self::close(n, &gens, fact.max(DEFAULT_ORDER_CAP))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    pub fn class_of_element(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).copied()
    }

    pub fn class_of_perm(&self, p: &Permutation) -> Option<usize> {
        self.element_index(p).map(|i| self.class_of[i])
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index.contains_key(p.images())
    }

    /// True when every element of `self` belongs to `parent`.
    pub fn is_subgroup_of(&self, parent: &FiniteGroup) -> bool {
        self.degree == parent.degree && self.elements.iter().all(|p| parent.contains(p))
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order() / self.classes[class].size
    }

    /// Product of two elements given by index.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[p.images()]
    }
}

fn groups_equal(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, PartialEq)]
enum CfData {
    /// Constant class function (a rational/cyclotomic multiple of the
    /// trivial character) on whichever group context it meets.
    Scalar(Cyclotomic),
    OnGroup(Arc<FiniteGroup>, Vec<Cyclotomic>),
}

/// Map from conjugacy classes to cyclotomic numbers.
#[derive(Clone)]
pub struct ClassFunction {
    data: CfData,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        match (&self.data, &other.data) {
            (CfData::Scalar(a), CfData::Scalar(b)) => a == b,
            (CfData::OnGroup(g, a), CfData::OnGroup(h, b)) => groups_equal(g, h) && a == b,
            (CfData::Scalar(a), CfData::OnGroup(_, b)) | (CfData::OnGroup(_, b), CfData::Scalar(a)) => {
                b.iter().all(|v| v == a)
            }
        }
    }
}

impl ClassFunction {
    pub fn on_group(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.num_classes(), "one value per conjugacy class");
        ClassFunction { data: CfData::OnGroup(group, values) }
    }

    pub fn scalar(value: Cyclotomic) -> Self {
        ClassFunction { data: CfData::Scalar(value) }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let values = vec![Cyclotomic::one(); group.num_classes()];
        Self::on_group(group, values)
    }

    /// Regular character: |G| at the identity, 0 elsewhere.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let mut values = vec![Cyclotomic::zero(); group.num_classes()];
        values[0] = Cyclotomic::from_int(group.order() as i64);
        Self::on_group(group, values)
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.data {
            CfData::Scalar(_) => None,
            CfData::OnGroup(g, _) => Some(g),
        }
    }

    pub fn value_at_class(&self, class: usize) -> Cyclotomic {
        match &self.data {
            CfData::Scalar(v) => v.clone(),
            CfData::OnGroup(_, values) => values[class].clone(),
        }
    }

    /// Values indexed by the classes of `group`; a scalar broadcasts.
    pub fn values_on(&self, group: &Arc<FiniteGroup>) -> Vec<Cyclotomic> {
        match &self.data {
            CfData::Scalar(v) => vec![v.clone(); group.num_classes()],
            CfData::OnGroup(g, values) => {
                assert!(groups_equal(g, group), "class function on a different group");
                values.clone()
            }
        }
    }

    /// Value at the identity.
    pub fn char_degree(&self) -> Cyclotomic {
        self.value_at_class(0)
    }

    pub fn conj(&self) -> Self {
        let data = match &self.data {
            CfData::Scalar(v) => CfData::Scalar(v.conj()),
            CfData::OnGroup(g, values) => {
                CfData::OnGroup(g.clone(), values.iter().map(|v| v.conj()).collect())
            }
        };
        ClassFunction { data }
    }

    fn merge(a: &Self, b: &Self, op: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        match (&a.data, &b.data) {
            (CfData::Scalar(x), CfData::Scalar(y)) => ClassFunction::scalar(op(x, y)),
            (CfData::Scalar(x), CfData::OnGroup(g, ys)) => {
                ClassFunction::on_group(g.clone(), ys.iter().map(|y| op(x, y)).collect())
            }
            (CfData::OnGroup(g, xs), CfData::Scalar(y)) => {
                ClassFunction::on_group(g.clone(), xs.iter().map(|x| op(x, y)).collect())
            }
            (CfData::OnGroup(g, xs), CfData::OnGroup(h, ys)) => {
                assert!(groups_equal(g, h), "class function arithmetic across groups");
                ClassFunction::on_group(g.clone(), xs.iter().zip(ys).map(|(x, y)| op(x, y)).collect())
            }
        }
    }
}

impl Ring for ClassFunction {
    fn zero() -> Self {
        ClassFunction::scalar(Cyclotomic::zero())
    }
    fn one() -> Self {
        ClassFunction::scalar(Cyclotomic::one())
    }
    fn is_zero(&self) -> bool {
        match &self.data {
            CfData::Scalar(v) => v.is_zero(),
            CfData::OnGroup(_, values) => values.iter().all(|v| v.is_zero()),
        }
    }
    fn add(&self, other: &Self) -> Self {
        Self::merge(self, other, Cyclotomic::add)
    }
    fn sub(&self, other: &Self) -> Self {
        Self::merge(self, other, Cyclotomic::sub)
    }
    fn mul(&self, other: &Self) -> Self {
        Self::merge(self, other, Cyclotomic::mul)
    }
    fn neg(&self) -> Self {
        match &self.data {
            CfData::Scalar(v) => ClassFunction::scalar(v.neg()),
            CfData::OnGroup(g, values) => {
                ClassFunction::on_group(g.clone(), values.iter().map(|v| v.neg()).collect())
            }
        }
    }
    fn from_rational(r: &Rational) -> Self {
        ClassFunction::scalar(Cyclotomic::from_rational(r.clone()))
    }
    fn scale(&self, r: &Rational) -> Self {
        match &self.data {
            CfData::Scalar(v) => ClassFunction::scalar(v.scale(r)),
            CfData::OnGroup(g, values) => {
                ClassFunction::on_group(g.clone(), values.iter().map(|v| v.scale(r)).collect())
            }
        }
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data {
            CfData::Scalar(v) => write!(f, "cf[{v}]"),
            CfData::OnGroup(_, values) => {
                write!(f, "cf[")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// ⟨φ, χ⟩ = (1/|G|) Σ_g φ(g)·conj(χ(g)), evaluated classwise.
pub fn inner_product(phi: &ClassFunction, chi: &ClassFunction) -> Result<Cyclotomic, GroupError> {
    let group = match (phi.group(), chi.group()) {
        (Some(g), Some(h)) => {
            if !groups_equal(g, h) {
                return Err(GroupError::GroupMismatch);
            }
            g.clone()
        }
        (Some(g), None) | (None, Some(g)) => g.clone(),
        (None, None) => return Err(GroupError::GroupMismatch),
    };
    let mut total = Cyclotomic::zero();
    for (c, class) in group.classes().iter().enumerate() {
        let term = phi
            .value_at_class(c)
            .mul(&chi.value_at_class(c).conj())
            .scale(&Rational::from_integer(BigInt::from(class.size)));
        total = total.add(&term);
    }
    Ok(total.scale(&Rational::new(BigInt::from(1), BigInt::from(group.order()))))
}

/// Multiplicities of a class function against a character table, with
/// integrality and effectiveness verdicts.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub multiplicities: Vec<Cyclotomic>,
    /// all multiplicities are rational integers
    pub is_virtual: bool,
    /// all multiplicities are nonnegative integers
    pub is_effective: bool,
}

/// Irreducible characters of a group, pairwise orthonormal.
#[derive(Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    labels: Vec<String>,
}

impl CharacterTable {
    /// Validates orthonormality and completeness before accepting.
    pub fn new(
        group: Arc<FiniteGroup>,
        irreducibles: Vec<ClassFunction>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        if irreducibles.len() != group.num_classes() {
            return Err(GroupError::InvalidTable(
                "number of irreducibles must equal number of classes",
            ));
        }
        if labels.len() != irreducibles.len() {
            return Err(GroupError::InvalidTable("one label per irreducible"));
        }
        for chi in &irreducibles {
            if let Some(g) = chi.group() {
                if !groups_equal(g, &group) {
                    return Err(GroupError::GroupMismatch);
                }
            }
        }
        for (i, a) in irreducibles.iter().enumerate() {
            for (j, b) in irreducibles.iter().enumerate() {
                let p = inner_product(a, b).map_err(|_| GroupError::GroupMismatch)?;
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if p != expected {
                    return Err(GroupError::InvalidTable("irreducibles are not orthonormal"));
                }
            }
        }
        Ok(CharacterTable { group, irreducibles, labels })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Character table of a cyclic group: χ_j(g^a) = ζ_n^{ja}, rows
    /// ordered by j with χ_0 trivial. The generator is the first element
    /// of full order in the element ordering.
    pub fn cyclic_on(group: Arc<FiniteGroup>) -> Result<Self, GroupError> {
        let n = group.order();
        let gen = (0..n)
            .find(|&i| group.element(i).order() == n as u64)
            .ok_or(GroupError::NotCyclic)?;
        if group.num_classes() != n {
            return Err(GroupError::NotCyclic);
        }
        // class index of g^a for a = 0..n-1
        let mut power_class = vec![0usize; n];
        let mut cur = 0usize; // identity index
        for pc in power_class.iter_mut() {
            *pc = group.class_of_element(cur);
            cur = group.multiply(gen, cur);
        }
        let mut irreducibles = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for j in 0..n {
            let mut values = vec![Cyclotomic::zero(); n];
            for (a, &cls) in power_class.iter().enumerate() {
                values[cls] = Cyclotomic::root_of_unity(n as u32, (j * a) as i64);
            }
            irreducibles.push(ClassFunction::on_group(group.clone(), values));
            labels.push(alloc::format!("chi_{j}"));
        }
        Self::new(group, irreducibles, labels)
    }

    /// Character table of the symmetric group in its natural action on
    /// n points. Rows are indexed by partitions of n in descending
    /// lexicographic order; classes are matched by cycle type.
    pub fn symmetric_natural(n: usize) -> Result<(Arc<FiniteGroup>, Self), GroupError> {
        let group = FiniteGroup::symmetric(n)?;
        let types: Vec<Vec<u32>> = (0..group.num_classes())
            .map(|c| group.class_representative(c).cycle_type())
            .collect();
        let table = Self::symmetric_on(group.clone(), &types)?;
        Ok((group, table))
    }

    /// Symmetric-group table attached to an arbitrary group isomorphic
    /// to S_n, given the coordinate cycle type of each conjugacy class.
    pub fn symmetric_on(
        group: Arc<FiniteGroup>,
        class_cycle_types: &[Vec<u32>],
    ) -> Result<Self, GroupError> {
        if class_cycle_types.len() != group.num_classes() {
            return Err(GroupError::InvalidTable("one cycle type per class"));
        }
        let n: u32 = class_cycle_types
            .first()
            .map(|t| t.iter().sum())
            .ok_or(GroupError::InvalidTable("no classes"))?;
        if n == 0 || n > 8 {
            return Err(GroupError::OutOfRange);
        }
        let lambdas = all_partitions(n);
        if lambdas.len() != group.num_classes() {
            return Err(GroupError::InvalidTable("class count does not match S_n"));
        }
        let mut memo = BTreeMap::new();
        let mut irreducibles = Vec::with_capacity(lambdas.len());
        let mut labels = Vec::with_capacity(lambdas.len());
        for lambda in &lambdas {
            let values: Vec<Cyclotomic> = class_cycle_types
                .iter()
                .map(|mu| Cyclotomic::from_int(mn_character_value(lambda, mu, &mut memo)))
                .collect();
            irreducibles.push(ClassFunction::on_group(group.clone(), values));
            let parts: Vec<String> = lambda.iter().map(|p| alloc::format!("{p}")).collect();
            labels.push(alloc::format!("chi[{}]", parts.join(",")));
        }
        Self::new(group, irreducibles, labels)
    }

    /// Character table of an elementary abelian 2-group: rows indexed by
    /// subsets S of an independent generating set, χ_S(g_T) = (-1)^{|S∩T|}.
    pub fn elementary2_on(group: Arc<FiniteGroup>) -> Result<Self, GroupError> {
        let order = group.order();
        if !order.is_power_of_two() || group.num_classes() != order {
            return Err(GroupError::NotElementaryAbelian2);
        }
        for i in 0..order {
            let o = group.element(i).order();
            if o != 1 && o != 2 {
                return Err(GroupError::NotElementaryAbelian2);
            }
        }
        let k = order.trailing_zeros() as usize;
        // greedy independent generators in element order
        let mut gens: Vec<usize> = Vec::new();
        let mut span: BTreeSet<usize> = BTreeSet::new();
        span.insert(0);
        for i in 1..order {
            if span.contains(&i) {
                continue;
            }
            let extended: Vec<usize> = span.iter().map(|&s| group.multiply(s, i)).collect();
            span.extend(extended);
            gens.push(i);
            if gens.len() == k {
                break;
            }
        }
        if gens.len() != k {
            return Err(GroupError::NotElementaryAbelian2);
        }
        // bit vector of every element over the chosen generators
        let mut bits_of = BTreeMap::new();
        for mask in 0..(1usize << k) {
            let mut e = 0usize;
            for (b, &g) in gens.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    e = group.multiply(e, g);
                }
            }
            bits_of.insert(e, mask);
        }
        let mut irreducibles = Vec::with_capacity(order);
        let mut labels = Vec::with_capacity(order);
        for s in 0..(1usize << k) {
            let mut values = vec![Cyclotomic::zero(); order];
            for (&e, &t) in &bits_of {
                let cls = group.class_of_element(e);
                let sign = if (s & t).count_ones() % 2 == 0 { 1 } else { -1 };
                values[cls] = Cyclotomic::from_int(sign);
            }
            irreducibles.push(ClassFunction::on_group(group.clone(), values));
            labels.push(alloc::format!("chi_{s}"));
        }
        Self::new(group, irreducibles, labels)
    }

    /// Multiplicities m_i = ⟨chi, χ_i⟩ with integrality flags.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Decomposition, GroupError> {
        if let Some(g) = chi.group() {
            if !groups_equal(g, &self.group) {
                return Err(GroupError::GroupMismatch);
            }
        }
        let multiplicities: Result<Vec<Cyclotomic>, GroupError> =
            self.irreducibles.iter().map(|irr| inner_product(chi, irr)).collect();
        let multiplicities = multiplicities?;
        let is_virtual = multiplicities.iter().all(|m| m.is_integer());
        let is_effective = multiplicities.iter().all(|m| m.is_nonnegative_integer());
        Ok(Decomposition { multiplicities, is_virtual, is_effective })
    }

    /// Σ m_i χ_i for given multiplicities.
    pub fn recombine(&self, multiplicities: &[Cyclotomic]) -> ClassFunction {
        let mut acc = ClassFunction::on_group(
            self.group.clone(),
            vec![Cyclotomic::zero(); self.group.num_classes()],
        );
        for (m, irr) in multiplicities.iter().zip(&self.irreducibles) {
            acc = acc.add(&irr.mul(&ClassFunction::scalar(m.clone())));
        }
        acc
    }
}

/// Pulls a class function on a parent group back to a subgroup.
pub fn restrict(
    chi: &ClassFunction,
    parent: &Arc<FiniteGroup>,
    subgroup: &Arc<FiniteGroup>,
) -> Result<ClassFunction, GroupError> {
    if let Some(g) = chi.group() {
        if !groups_equal(g, parent) {
            return Err(GroupError::GroupMismatch);
        }
    }
    if !subgroup.is_subgroup_of(parent) {
        return Err(GroupError::NotASubgroup);
    }
    let values: Vec<Cyclotomic> = (0..subgroup.num_classes())
        .map(|c| {
            let rep = subgroup.class_representative(c);
            let parent_class = parent.class_of_perm(rep).expect("member of parent");
            chi.value_at_class(parent_class)
        })
        .collect();
    Ok(ClassFunction::on_group(subgroup.clone(), values))
}

/// Characters of symmetric and exterior powers of a matrix assignment:
/// ext[i](g) = (-1)^i·[z^i] det(I - z·ρ(g)) and sym[t] from the
/// reciprocal power series, both exact.
pub fn power_characters(
    group: &Arc<FiniteGroup>,
    rho: &BTreeMap<usize, crate::linalg::QMat>,
    t_max: usize,
) -> (Vec<ClassFunction>, Vec<ClassFunction>) {
    let k = group.num_classes();
    let dim = rho.get(&0).map(|m| m.len()).unwrap_or(0);
    let mut ext_vals = vec![vec![Cyclotomic::zero(); k]; dim + 1];
    let mut sym_vals = vec![vec![Cyclotomic::zero(); k]; t_max + 1];
    for c in 0..k {
        let m = rho.get(&c).expect("matrix for every class representative");
        let det = crate::linalg::det_one_minus_z(m);
        for (i, coeff) in det.iter().enumerate() {
            let signed = if i % 2 == 0 { coeff.clone() } else { -coeff };
            ext_vals[i][c] = Cyclotomic::from_rational(signed);
        }
        // reciprocal power series of det up to t_max
        let mut inv = vec![Rational::from_integer(BigInt::from(0)); t_max + 1];
        inv[0] = Rational::from_integer(BigInt::from(1));
        for t in 1..=t_max {
            let mut acc = Rational::from_integer(BigInt::from(0));
            for j in 1..=t.min(det.len() - 1) {
                acc = acc + &det[j] * &inv[t - j];
            }
            inv[t] = -acc;
        }
        for (t, v) in inv.into_iter().enumerate() {
            sym_vals[t][c] = Cyclotomic::from_rational(v);
        }
    }
    let sym = sym_vals
        .into_iter()
        .map(|values| ClassFunction::on_group(group.clone(), values))
        .collect();
    let ext = ext_vals
        .into_iter()
        .map(|values| ClassFunction::on_group(group.clone(), values))
        .collect();
    (sym, ext)
}

/// Partitions of n, descending parts, listed in descending
/// lexicographic order: (n) first, (1,…,1) last.
pub fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Murnaghan–Nakayama: value of the irreducible character χ_λ of S_n on
/// a class of cycle type μ, by border-strip removal on beta-sets.
pub fn mn_character_value(
    lambda: &[u32],
    mu: &[u32],
    memo: &mut BTreeMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let ell = mu[0] as i64;
    let rest: Vec<u32> = mu[1..].to_vec();
    // beta-set: λ_i + (k - 1 - i) for 0-indexed rows
    let k = lambda.len();
    let beta: Vec<i64> =
        lambda.iter().enumerate().map(|(i, &l)| l as i64 + (k - 1 - i) as i64).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let target = b - ell;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // height of the strip = entries strictly between target and b
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (k - 1 - j) as i64) as u32)
            .filter(|&x| x > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character_value(&new_lambda, &rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn close_small_groups() {
        let z3 = FiniteGroup::close(3, &[perm(&[1, 2, 0])], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(z3.order(), 3);
        assert_eq!(z3.num_classes(), 3);
        assert_eq!(z3.exponent(), 3);

        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.num_classes(), 5);
        assert_eq!(s4.exponent(), 12);

        let trivial = FiniteGroup::trivial(5);
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.num_classes(), 1);
    }

    #[test]
    fn class_sizes_sum_to_order() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let total: usize = s4.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, 24);
        let mut sizes: Vec<usize> = s4.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, alloc::vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn cyclic_table_matches_roots_of_unity() {
        let z3 = FiniteGroup::cyclic(3);
        let table = CharacterTable::cyclic_on(z3.clone()).unwrap();
        assert_eq!(table.irreducibles().len(), 3);
        let gen_class = z3.class_of_perm(&perm(&[1, 2, 0])).unwrap();
        assert_eq!(
            table.irreducibles()[1].value_at_class(gen_class),
            Cyclotomic::root_of_unity(3, 1)
        );

        let z1 = FiniteGroup::cyclic(1);
        let t1 = CharacterTable::cyclic_on(z1).unwrap();
        assert_eq!(t1.irreducibles().len(), 1);

        // n = 4: entries are 1, -1, ±i
        let z4 = FiniteGroup::cyclic(4);
        let t4 = CharacterTable::cyclic_on(z4.clone()).unwrap();
        let g = z4.class_of_perm(&perm(&[1, 2, 3, 0])).unwrap();
        assert_eq!(t4.irreducibles()[2].value_at_class(g), Cyclotomic::from_int(-1));
        assert_eq!(t4.irreducibles()[1].value_at_class(g), Cyclotomic::root_of_unity(4, 1));
    }

    #[test]
    fn inner_products_on_z3() {
        let z3 = FiniteGroup::cyclic(3);
        let table = CharacterTable::cyclic_on(z3.clone()).unwrap();
        let triv = &table.irreducibles()[0];
        assert_eq!(inner_product(triv, triv).unwrap(), Cyclotomic::one());
        assert_eq!(
            inner_product(&table.irreducibles()[1], &table.irreducibles()[2]).unwrap(),
            Cyclotomic::zero()
        );
        // permutation character (4,1,1): ⟨·, χ_1⟩ = 1
        let phi = ClassFunction::on_group(
            z3.clone(),
            alloc::vec![Cyclotomic::from_int(4), Cyclotomic::from_int(1), Cyclotomic::from_int(1)],
        );
        assert_eq!(inner_product(&phi, &table.irreducibles()[1]).unwrap(), Cyclotomic::one());
        let d = table.decompose(&phi).unwrap();
        assert!(d.is_effective);
        assert_eq!(
            d.multiplicities,
            alloc::vec![Cyclotomic::from_int(2), Cyclotomic::from_int(1), Cyclotomic::from_int(1)]
        );
    }

    #[test]
    fn decompose_regular_and_nonvirtual() {
        // (Z/2Z)²: regular character decomposes as (1,1,1,1)
        let klein =
            FiniteGroup::close(4, &[perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])], DEFAULT_ORDER_CAP)
                .unwrap();
        assert_eq!(klein.order(), 4);
        let table = CharacterTable::elementary2_on(klein.clone()).unwrap();
        let reg = ClassFunction::regular(klein.clone());
        let d = table.decompose(&reg).unwrap();
        assert!(d.is_effective);
        assert!(d.multiplicities.iter().all(|m| *m == Cyclotomic::one()));

        // non-integral multiplicities flagged
        let z3 = FiniteGroup::cyclic(3);
        let t3 = CharacterTable::cyclic_on(z3.clone()).unwrap();
        let phi = ClassFunction::on_group(
            z3,
            alloc::vec![
                Cyclotomic::one(),
                Cyclotomic::from_rational(rat(1, 2)),
                Cyclotomic::from_rational(rat(1, 2))
            ],
        );
        let d = t3.decompose(&phi).unwrap();
        assert!(!d.is_virtual);
        assert!(!d.is_effective);
    }

    #[test]
    fn murnaghan_nakayama_small() {
        let mut memo = BTreeMap::new();
        // S3, χ_{(2,1)} on classes (1,1,1), (2,1), (3) → (2, 0, -1)
        assert_eq!(mn_character_value(&[2, 1], &[1, 1, 1], &mut memo), 2);
        assert_eq!(mn_character_value(&[2, 1], &[2, 1], &mut memo), 0);
        assert_eq!(mn_character_value(&[2, 1], &[3], &mut memo), -1);
        // S2
        assert_eq!(mn_character_value(&[2], &[2], &mut memo), 1);
        assert_eq!(mn_character_value(&[1, 1], &[2], &mut memo), -1);
    }

    #[test]
    fn symmetric_table_s4() {
        let (s4, table) = CharacterTable::symmetric_natural(4).unwrap();
        assert_eq!(table.irreducibles().len(), 5);
        // expected characters by cycle type, from the S4 character table
        let expect: &[(&[u32], &[(&[u32], i64)])] = &[
            (&[4], &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 1), (&[2, 2], 1), (&[3, 1], 1), (&[4], 1)]),
            (
                &[3, 1],
                &[(&[1, 1, 1, 1], 3), (&[2, 1, 1], 1), (&[2, 2], -1), (&[3, 1], 0), (&[4], -1)],
            ),
            (&[2, 2], &[(&[1, 1, 1, 1], 2), (&[2, 1, 1], 0), (&[2, 2], 2), (&[3, 1], -1), (&[4], 0)]),
            (
                &[2, 1, 1],
                &[(&[1, 1, 1, 1], 3), (&[2, 1, 1], -1), (&[2, 2], -1), (&[3, 1], 0), (&[4], 1)],
            ),
            (
                &[1, 1, 1, 1],
                &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], -1), (&[2, 2], 1), (&[3, 1], 1), (&[4], -1)],
            ),
        ];
        let lambdas = all_partitions(4);
        for (row, (lambda, values)) in expect.iter().enumerate() {
            assert_eq!(lambdas[row], lambda.to_vec());
            for (mu, v) in values.iter() {
                let class = (0..s4.num_classes())
                    .find(|&c| s4.class_representative(c).cycle_type() == mu.to_vec())
                    .unwrap();
                assert_eq!(
                    table.irreducibles()[row].value_at_class(class),
                    Cyclotomic::from_int(*v),
                    "λ={lambda:?} μ={mu:?}"
                );
            }
        }
        // S2 table is {(1,1), (1,-1)}
        let (s2, t2) = CharacterTable::symmetric_natural(2).unwrap();
        let swap_class = s2.class_of_perm(&perm(&[1, 0])).unwrap();
        assert_eq!(t2.irreducibles()[0].value_at_class(swap_class), Cyclotomic::one());
        assert_eq!(t2.irreducibles()[1].value_at_class(swap_class), Cyclotomic::from_int(-1));
    }

    #[test]
    fn column_orthogonality() {
        for table in [
            CharacterTable::symmetric_natural(4).unwrap().1,
            CharacterTable::cyclic_on(FiniteGroup::cyclic(4)).unwrap(),
        ] {
            let g = table.group().clone();
            for a in 0..g.num_classes() {
                for b in 0..g.num_classes() {
                    let mut sum = Cyclotomic::zero();
                    for chi in table.irreducibles() {
                        sum = sum.add(&chi.value_at_class(a).mul(&chi.value_at_class(b).conj()));
                    }
                    let expected = if a == b {
                        Cyclotomic::from_int(g.centralizer_order(a) as i64)
                    } else {
                        Cyclotomic::zero()
                    };
                    assert_eq!(sum, expected);
                }
            }
        }
    }

    #[test]
    fn decompose_recombine_round_trip() {
        let (s4, table) = CharacterTable::symmetric_natural(4).unwrap();
        // natural permutation character of S4 on 4 points
        let values: Vec<Cyclotomic> = (0..s4.num_classes())
            .map(|c| {
                let rep = s4.class_representative(c);
                let fixed = (0..4).filter(|&i| rep.apply(i) == i).count();
                Cyclotomic::from_int(fixed as i64)
            })
            .collect();
        let chi = ClassFunction::on_group(s4.clone(), values);
        let d = table.decompose(&chi).unwrap();
        assert!(d.is_effective);
        assert_eq!(table.recombine(&d.multiplicities), chi);
    }

    #[test]
    fn restriction() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let z4 = FiniteGroup::cyclic(4);
        assert!(z4.is_subgroup_of(&s4));
        let triv = ClassFunction::trivial(s4.clone());
        let r = restrict(&triv, &s4, &z4).unwrap();
        assert_eq!(r, ClassFunction::trivial(z4.clone()));
        // restriction preserves the degree
        let (_, table) = CharacterTable::symmetric_natural(4).unwrap();
        for chi in table.irreducibles() {
            let r = restrict(chi, &s4, &z4).unwrap();
            assert_eq!(r.char_degree(), chi.char_degree());
        }
        // restricting to the full group is the identity
        let chi = table.irreducibles()[1].clone();
        assert_eq!(restrict(&chi, &s4, &s4).unwrap(), chi);
        // not a subgroup
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(restrict(&triv, &s4, &z3), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn power_characters_cyclic() {
        use crate::rational::rat_int;
        let z3 = FiniteGroup::cyclic(3);
        // 3-dimensional permutation representation
        let mut rho = BTreeMap::new();
        for c in 0..z3.num_classes() {
            let rep = z3.class_representative(c);
            let m: crate::linalg::QMat = (0..3)
                .map(|i| (0..3).map(|j| rat_int(if rep.apply(j) == i { 1 } else { 0 })).collect())
                .collect();
            rho.insert(c, m);
        }
        let (sym, ext) = power_characters(&z3, &rho, 8);
        // at a 3-cycle: det = 1 - z³, so exterior characters (1,0,0,1)
        let g = z3.class_of_perm(&perm(&[1, 2, 0])).unwrap();
        assert_eq!(ext[0].value_at_class(g), Cyclotomic::one());
        assert_eq!(ext[1].value_at_class(g), Cyclotomic::zero());
        assert_eq!(ext[2].value_at_class(g), Cyclotomic::zero());
        assert_eq!(ext[3].value_at_class(g), Cyclotomic::one());
        // sym[0] is trivial
        assert_eq!(sym[0], ClassFunction::trivial(z3.clone()));
        // identity: sym series equals coefficients of 1/(1-z)³
        for t in 0..=8usize {
            let expected = ((t + 1) * (t + 2) / 2) as i64;
            assert_eq!(sym[t].value_at_class(0), Cyclotomic::from_int(expected));
        }
        // truncated reciprocal identity: Σ_j sym_{t-j}(g)·det_j(g) = [t=0]
        for c in 0..z3.num_classes() {
            let det = crate::linalg::det_one_minus_z(rho.get(&c).unwrap());
            for t in 0..=8usize {
                let mut acc = Cyclotomic::zero();
                for j in 0..=t.min(det.len() - 1) {
                    acc = acc.add(&sym[t - j].value_at_class(c).scale(&det[j]));
                }
                let expected = if t == 0 { Cyclotomic::one() } else { Cyclotomic::zero() };
                assert_eq!(acc, expected);
            }
        }
    }
}
