use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedMul, One, Signed, Zero};
use smallvec::SmallVec;

use super::vars::{VarId, VarRegistry};

/// Exact rational coefficient.
///
/// All designs in the catalog have coefficients with tiny numerators and
/// denominators (the worst case is the 1/2 factors of the order-512
/// construction, which cancel), so a 64-bit rational is plenty. Arithmetic
/// goes through the checked operations below and aborts loudly instead of
/// wrapping if a computation ever leaves that range.
pub type Coeff = Rational64;

pub(crate) fn cadd(a: &Coeff, b: &Coeff) -> Coeff {
    a.checked_add(b).expect("rational coefficient overflow")
}

pub(crate) fn cmul(a: &Coeff, b: &Coeff) -> Coeff {
    a.checked_mul(b).expect("rational coefficient overflow")
}

/// Product of variable powers. Factors are sorted by [`VarId`] and exponents
/// are nonzero; the empty product is the constant monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(VarId, u32); 2]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            factors: SmallVec::from_slice(&[(v, 1)]),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// The variable v if this monomial is exactly v^1.
    pub fn as_single_var(&self) -> Option<VarId> {
        match self.factors.as_slice() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { factors }
    }

    pub fn rename(&self, map: &BTreeMap<VarId, VarId>) -> Monomial {
        let mut factors: SmallVec<[(VarId, u32); 2]> = self
            .factors
            .iter()
            .map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e))
            .collect();
        factors.sort_unstable_by_key(|&(v, _)| v);
        Monomial { factors }
    }
}

/// Graded lexicographic order: total degree first, then lexicographic in the
/// exponent vector read in increasing [`VarId`] order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Sparse lex comparison: at the first differing variable position,
        // the side holding the smaller VarId has a positive exponent where
        // the other has zero, so it is lexicographically larger.
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a[i].1.cmp(&b[j].1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    // Larger exponent at the shared leading variable wins.
                    ord => return ord,
                },
            }
        }
        match (i < a.len(), j < b.len()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in ascending monomial order with no zero coefficients, so
/// structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Coeff::from_integer(n))
    }

    pub fn var(v: VarId) -> Self {
        Polynomial {
            terms: vec![(Monomial::var(v), Coeff::one())],
        }
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            merge_term(&mut map, m, c);
        }
        Self::from_term_map(map)
    }

    fn from_term_map(map: BTreeMap<Monomial, Coeff>) -> Self {
        Polynomial {
            terms: map.into_iter().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// The value of the polynomial if it is constant (including zero).
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    /// `(v, +1)` or `(v, -1)` if the polynomial is exactly +v or -v.
    pub fn as_signed_var(&self) -> Option<(VarId, i64)> {
        match self.terms.as_slice() {
            [(m, c)] => {
                let v = m.as_single_var()?;
                if *c == Coeff::one() {
                    Some((v, 1))
                } else if *c == -Coeff::one() {
                    Some((v, -1))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// True if every term has degree at most one (constants allowed).
    pub fn is_linear(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.total_degree() <= 1)
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|(tm, _)| tm.cmp(m)) {
            Ok(i) => self.terms[i].1,
            Err(_) => Coeff::zero(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<VarId>) {
        for (m, _) in &self.terms {
            for &(v, _) in m.factors() {
                out.insert(v);
            }
        }
    }

    /// In-place `self += c * m`, keeping the canonical form.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(tm, _)| tm.cmp(&m)) {
            Ok(i) => {
                let sum = cadd(&self.terms[i].1, &c);
                if sum.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = sum;
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    /// In-place `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &Polynomial, b: &Polynomial) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), cmul(ca, cb));
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| (m.clone(), cmul(tc, c)))
                .collect(),
        }
    }

    /// Entrywise substitution of variables by polynomials; unmapped
    /// variables stay themselves.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut factor = Polynomial::constant(*c);
            for &(v, e) in m.factors() {
                let base = match assignment.get(&v) {
                    Some(p) => p.clone(),
                    None => Polynomial::var(v),
                };
                for _ in 0..e {
                    factor = &factor * &base;
                }
            }
            acc = &acc + &factor;
        }
        acc
    }

    pub fn rename(&self, map: &BTreeMap<VarId, VarId>) -> Polynomial {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), *c)))
    }

    /// Renders with the registry's display names, e.g. `x^2 - 1/2*a*b`.
    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, reg }
    }
}

fn merge_term(map: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = cadd(e.get(), &c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match self.terms[i].0.cmp(&rhs.terms[j].0) {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = cadd(&self.terms[i].1, &rhs.terms[j].1);
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        Polynomial { terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -*c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Polynomial {
                terms: rhs
                    .terms
                    .iter()
                    .map(|(rm, rc)| (m.mul(rm), cmul(c, rc)))
                    .collect(),
            };
        }
        let mut map = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                merge_term(&mut map, ma.mul(mb), cmul(ca, cb));
            }
        }
        Polynomial::from_term_map(map)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    reg: &'a VarRegistry,
}

fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(Monomial, Coeff)],
    name: &dyn Fn(VarId) -> String,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in terms.iter().enumerate() {
        if k == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let abs = c.abs();
        let show_coeff = !abs.is_one() || m.is_one();
        if show_coeff {
            if abs.is_integer() {
                write!(f, "{}", abs.numer())?;
            } else {
                write!(f, "{}/{}", abs.numer(), abs.denom())?;
            }
        }
        for (i, &(v, e)) in m.factors().iter().enumerate() {
            if show_coeff || i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.poly.terms, &|v| self.reg.name(v).to_string())
    }
}

/// Registry-free rendering names variables `#<id>`; used by error types.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, &|v| format!("#{}", v.index()))
    }
}
