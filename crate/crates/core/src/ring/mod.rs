//! Finite commutative unital rings with enumerable canonical elements.
//!
//! Every element of a [`Ring`] is identified by its position in the ring's
//! canonical element order, so equality of [`Elem`] values is equality of
//! canonical forms. The order is:
//!
//! * `ZMod(n)`: residues `0..n`;
//! * `PolyQuot(p, f)`: coefficient tuples compared from the highest degree
//!   down, so `F2[x]/(x^2)` lists `0, 1, x, 1+x`;
//! * `Product`: lexicographic with the first factor most significant;
//! * `Quotient`: cosets ordered by their representative, which is the
//!   smallest base element of the coset.

mod quotient;
mod text;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

pub use quotient::{quotient_ring, QuotientMap};
pub use text::{parse_element_list, parse_ideal_literal, ElemLiteral};

use crate::error::RingError;

/// Rings larger than this are rejected unless a different cap is requested.
pub const DEFAULT_MAX_RING_SIZE: usize = 4096;

// Rings up to this size get materialized addition and multiplication tables.
const TABLE_LIMIT: u32 = 512;

/// Structural presentation of a finite commutative unital ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// Integers modulo `n`.
    ZMod(u64),
    /// `F_p[x] / (modulus)`, coefficients listed from the constant term up.
    PolyQuot {
        p: u64,
        modulus: Vec<u64>,
    },
    Product(Vec<RingDescriptor>),
    /// `base / (generators)`.
    Quotient {
        base: Box<RingDescriptor>,
        generators: Vec<ElemLiteral>,
    },
}

impl RingDescriptor {
    /// Number of elements, or `None` for quotients (known only after the
    /// ideal has been materialized).
    fn static_size(&self) -> Option<u128> {
        match self {
            RingDescriptor::ZMod(n) => Some(*n as u128),
            RingDescriptor::PolyQuot { p, modulus } => {
                let deg = modulus.len().saturating_sub(1) as u32;
                (*p as u128).checked_pow(deg)
            }
            RingDescriptor::Product(fs) => fs.iter().try_fold(1u128, |acc, f| {
                f.static_size().and_then(|s| acc.checked_mul(s))
            }),
            RingDescriptor::Quotient { .. } => None,
        }
    }
}

/// Identity of a built ring. Elements carry it so that mixing elements of
/// different rings is detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// An element of a built ring: the ring's id plus the element's position in
/// the canonical element order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    ring: RingId,
    index: u32,
}

impl Elem {
    /// Position in the owning ring's canonical element order.
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn ring_id(self) -> RingId {
        self.ring
    }
}

/// Shared handle to an immutable finite ring.
#[derive(Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

struct RingInner {
    id: RingId,
    descriptor: RingDescriptor,
    size: u32,
    one: u32,
    kind: Kind,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

enum Kind {
    ZMod {
        n: u32,
    },
    PolyQuot {
        p: u32,
        // monic, length deg + 1
        modulus: Vec<u32>,
        deg: usize,
    },
    Product {
        factors: Vec<Ring>,
        strides: Vec<u32>,
    },
    Quotient {
        base: Ring,
        class_of: Vec<u32>,
        reps: Vec<u32>,
    },
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.inner.descriptor)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.inner.descriptor, f)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    /// Builds a ring with the default size cap.
    pub fn build(desc: &RingDescriptor) -> Result<Ring, RingError> {
        Ring::build_with_cap(desc, DEFAULT_MAX_RING_SIZE)
    }

    /// Parses ring-spec text and builds the ring.
    pub fn parse(spec: &str) -> Result<Ring, crate::Error> {
        let desc: RingDescriptor = spec.parse()?;
        Ok(Ring::build(&desc)?)
    }

    pub fn build_with_cap(desc: &RingDescriptor, cap: usize) -> Result<Ring, RingError> {
        if let Some(size) = desc.static_size() {
            if size > cap as u128 {
                validate_shallow(desc)?;
                return Err(RingError::TooLarge { size, cap });
            }
        }
        let (kind, size, one) = match desc {
            RingDescriptor::ZMod(n) => {
                if *n < 2 {
                    return Err(RingError::ModulusTooSmall(*n));
                }
                let n = *n as u32;
                (Kind::ZMod { n }, n, 1)
            }
            RingDescriptor::PolyQuot { p, modulus } => {
                validate_shallow(desc)?;
                let deg = modulus.len() - 1;
                let size = (*p as u32).pow(deg as u32);
                let kind = Kind::PolyQuot {
                    p: *p as u32,
                    modulus: modulus.iter().map(|&c| c as u32).collect(),
                    deg,
                };
                (kind, size, 1)
            }
            RingDescriptor::Product(descs) => {
                if descs.is_empty() {
                    return Err(RingError::EmptyProduct);
                }
                let factors = descs
                    .iter()
                    .map(|d| Ring::build_with_cap(d, cap))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut strides = vec![1u32; factors.len()];
                for i in (0..factors.len().saturating_sub(1)).rev() {
                    strides[i] = strides[i + 1] * factors[i + 1].inner.size;
                }
                let size = strides[0] * factors[0].inner.size;
                let one = factors
                    .iter()
                    .zip(&strides)
                    .map(|(f, s)| f.inner.one * s)
                    .sum();
                (Kind::Product { factors, strides }, size, one)
            }
            RingDescriptor::Quotient { base, generators } => {
                let base = Ring::build_with_cap(base, cap)?;
                let gens = generators
                    .iter()
                    .map(|lit| base.resolve(lit).map(|e| e.index))
                    .collect::<Result<Vec<_>, _>>()?;
                return Ring::quotient_by(&base, &gens, desc.clone());
            }
        };
        Ok(Ring::finish(desc.clone(), kind, size, one))
    }

    /// `base / (gens)` sharing the given base handle, so the canonical
    /// surjection can be read off directly.
    pub(crate) fn quotient_by(
        base: &Ring,
        gens: &[u32],
        descriptor: RingDescriptor,
    ) -> Result<Ring, RingError> {
        let members = base.span_raw(gens);
        if members.contains(base.inner.one as usize) {
            return Err(RingError::ImproperQuotient);
        }
        let (class_of, reps) = base.cosets(&members);
        let size = reps.len() as u32;
        let one = class_of[base.inner.one as usize];
        let kind = Kind::Quotient {
            base: base.clone(),
            class_of,
            reps,
        };
        Ok(Ring::finish(descriptor, kind, size, one))
    }

    fn finish(descriptor: RingDescriptor, kind: Kind, size: u32, one: u32) -> Ring {
        let mut inner = RingInner {
            id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
            descriptor,
            size,
            one,
            kind,
            tables: None,
        };
        if size <= TABLE_LIMIT {
            let n = size as usize;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..size {
                for b in 0..size {
                    add.push(inner.kind_add(a, b));
                    mul.push(inner.kind_mul(a, b));
                }
            }
            inner.tables = Some(Tables { add, mul });
        }
        Ring {
            inner: Arc::new(inner),
        }
    }

    /// For a quotient ring: the base ring and the class index of every base
    /// element.
    pub(crate) fn quotient_parts(&self) -> Option<(&Ring, &[u32])> {
        match &self.inner.kind {
            Kind::Quotient { base, class_of, .. } => Some((base, class_of)),
            _ => None,
        }
    }

    pub fn id(&self) -> RingId {
        self.inner.id
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.inner.descriptor
    }

    pub fn size(&self) -> usize {
        self.inner.size as usize
    }

    pub fn zero(&self) -> Elem {
        self.wrap(0)
    }

    pub fn one(&self) -> Elem {
        self.wrap(self.inner.one)
    }

    /// The element at `index` in canonical order.
    pub fn element(&self, index: usize) -> Option<Elem> {
        (index < self.size()).then(|| self.wrap(index as u32))
    }

    /// All elements, each exactly once, in canonical order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + '_ {
        (0..self.inner.size).map(|i| self.wrap(i))
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.ring == self.inner.id && e.index < self.inner.size
    }

    pub fn is_zero(&self, e: Elem) -> bool {
        self.check(e);
        e.index == 0
    }

    /// # Panics
    ///
    /// Panics when an operand belongs to another ring; see [`Ring::try_add`].
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.check(a);
        self.check(b);
        self.wrap(self.add_raw(a.index, b.index))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.check(a);
        self.check(b);
        self.wrap(self.mul_raw(a.index, b.index))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.check(a);
        self.wrap(self.neg_raw(a.index))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k` by repeated squaring; `pow(a, 0)` is one.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        self.check(a);
        self.wrap(self.pow_raw(a.index, k))
    }

    /// Product of a sequence; the empty product is one.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(acc, x))
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(acc, x))
    }

    pub fn try_add(&self, a: Elem, b: Elem) -> Result<Elem, RingError> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem, RingError> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_neg(&self, a: Elem) -> Result<Elem, RingError> {
        self.owns(a)?;
        Ok(self.neg(a))
    }

    pub fn try_pow(&self, a: Elem, k: u64) -> Result<Elem, RingError> {
        self.owns(a)?;
        Ok(self.pow(a, k))
    }

    /// Errors with [`RingError::MixedRings`] unless `e` belongs to this ring.
    pub fn owns(&self, e: Elem) -> Result<(), RingError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(RingError::MixedRings)
        }
    }

    /// Ring-independent syntax for `e`.
    pub fn literal(&self, e: Elem) -> ElemLiteral {
        self.check(e);
        self.literal_raw(e.index)
    }

    /// Canonical text of `e`: an integer, a coefficient list, or a tuple.
    pub fn render(&self, e: Elem) -> String {
        self.literal(e).to_string()
    }

    pub fn render_all(&self, es: &[Elem]) -> Vec<String> {
        es.iter().map(|&e| self.render(e)).collect()
    }

    pub fn resolve(&self, lit: &ElemLiteral) -> Result<Elem, RingError> {
        self.resolve_raw(lit).map(|i| self.wrap(i))
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem, crate::Error> {
        let lit: ElemLiteral = text.parse()?;
        Ok(self.resolve(&lit)?)
    }

    pub fn parse_elements(&self, text: &str) -> Result<Vec<Elem>, crate::Error> {
        parse_element_list(text)?
            .iter()
            .map(|lit| self.resolve(lit).map_err(Into::into))
            .collect()
    }

    pub(crate) fn wrap(&self, index: u32) -> Elem {
        Elem {
            ring: self.inner.id,
            index,
        }
    }

    fn check(&self, e: Elem) {
        assert!(
            e.ring == self.inner.id,
            "element from a different ring passed to {}",
            self.inner.descriptor
        );
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &self.inner.tables {
            Some(t) => t.add[(a * self.inner.size + b) as usize],
            None => self.inner.kind_add(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.inner.tables {
            Some(t) => t.mul[(a * self.inner.size + b) as usize],
            None => self.inner.kind_mul(a, b),
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        self.inner.kind_neg(a)
    }

    pub(crate) fn pow_raw(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = self.inner.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_raw(base, base);
            }
        }
        acc
    }

    /// The ideal generated by `gens`, as a membership set over element
    /// indices. Each principal ideal `R g` is already an additive subgroup,
    /// so the ideal is the iterated sumset of the principal ideals.
    pub(crate) fn span_raw(&self, gens: &[u32]) -> FixedBitSet {
        let n = self.size();
        let mut members = FixedBitSet::with_capacity(n);
        members.insert(0);
        for &g in gens {
            self.absorb_principal(&mut members, g);
        }
        members
    }

    /// Replaces `members` (an ideal) with `members + R g`.
    pub(crate) fn absorb_principal(&self, members: &mut FixedBitSet, g: u32) {
        if members.contains(g as usize) {
            return;
        }
        let n = self.size();
        let mut principal = FixedBitSet::with_capacity(n);
        for r in 0..self.inner.size {
            principal.insert(self.mul_raw(r, g) as usize);
        }
        let current: Vec<u32> = members.ones().map(|i| i as u32).collect();
        let multiples: Vec<u32> = principal.ones().map(|i| i as u32).collect();
        let mut next = FixedBitSet::with_capacity(n);
        for &c in &current {
            for &m in &multiples {
                next.insert(self.add_raw(c, m) as usize);
            }
        }
        *members = next;
    }

    /// Coset partition by an additive subgroup: `class_of[x]` is the coset
    /// index of `x`, `reps[c]` the smallest member of coset `c`.
    fn cosets(&self, subgroup: &FixedBitSet) -> (Vec<u32>, Vec<u32>) {
        let n = self.inner.size;
        let mut class_of = vec![u32::MAX; n as usize];
        let mut reps = Vec::new();
        let members: Vec<u32> = subgroup.ones().map(|i| i as u32).collect();
        for x in 0..n {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let class = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                class_of[self.add_raw(x, m) as usize] = class;
            }
        }
        (class_of, reps)
    }

    fn literal_raw(&self, index: u32) -> ElemLiteral {
        match &self.inner.kind {
            Kind::ZMod { .. } => ElemLiteral::Int(index as u64),
            Kind::PolyQuot { p, deg, .. } => {
                ElemLiteral::List(digits(index, *p, *deg).into_iter().map(u64::from).collect())
            }
            Kind::Product { factors, strides } => ElemLiteral::Tuple(
                factors
                    .iter()
                    .zip(strides)
                    .map(|(f, s)| f.literal_raw((index / s) % f.inner.size))
                    .collect(),
            ),
            Kind::Quotient { base, reps, .. } => base.literal_raw(reps[index as usize]),
        }
    }

    fn resolve_raw(&self, lit: &ElemLiteral) -> Result<u32, RingError> {
        let bad = |reason: &str| RingError::BadElement {
            text: lit.to_string(),
            ring: self.inner.descriptor.to_string(),
            reason: reason.to_string(),
        };
        match (&self.inner.kind, lit) {
            (Kind::ZMod { n }, ElemLiteral::Int(v)) => {
                if *v < *n as u64 {
                    Ok(*v as u32)
                } else {
                    Err(bad("residue must be below the modulus"))
                }
            }
            (Kind::PolyQuot { p, deg, .. }, ElemLiteral::List(cs)) => {
                if cs.len() > *deg {
                    return Err(bad("more coefficients than the modulus degree allows"));
                }
                let mut index = 0u32;
                for &c in cs.iter().rev() {
                    if c >= *p as u64 {
                        return Err(bad("coefficient must be below p"));
                    }
                    index = index * p + c as u32;
                }
                Ok(index)
            }
            (Kind::PolyQuot { p, .. }, ElemLiteral::Int(c)) => {
                if *c < *p as u64 {
                    Ok(*c as u32)
                } else {
                    Err(bad("constant must be below p"))
                }
            }
            (Kind::Product { factors, strides }, ElemLiteral::Tuple(items)) => {
                if items.len() != factors.len() {
                    return Err(bad("tuple length differs from the number of factors"));
                }
                let mut index = 0;
                for ((f, s), item) in factors.iter().zip(strides).zip(items) {
                    index += f.resolve_raw(item)? * s;
                }
                Ok(index)
            }
            (Kind::Quotient { base, class_of, .. }, _) => {
                Ok(class_of[base.resolve_raw(lit)? as usize])
            }
            _ => Err(bad("wrong literal shape for this ring kind")),
        }
    }
}

fn validate_shallow(desc: &RingDescriptor) -> Result<(), RingError> {
    match desc {
        RingDescriptor::ZMod(n) if *n < 2 => Err(RingError::ModulusTooSmall(*n)),
        RingDescriptor::PolyQuot { p, modulus } => {
            if !is_prime(*p) {
                return Err(RingError::NotPrime(*p));
            }
            if modulus.len() < 2 {
                return Err(RingError::ConstantModulus);
            }
            if let Some(&c) = modulus.iter().find(|&&c| c >= *p) {
                return Err(RingError::CoefficientOutOfRange { value: c, p: *p });
            }
            let lead = *modulus.last().unwrap();
            if lead != 1 {
                return Err(RingError::NotMonic(lead));
            }
            Ok(())
        }
        RingDescriptor::Product(fs) if fs.is_empty() => Err(RingError::EmptyProduct),
        _ => Ok(()),
    }
}

fn digits(mut index: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(deg);
    for _ in 0..deg {
        out.push(index % p);
        index /= p;
    }
    out
}

fn undigits(cs: &[u32], p: u32) -> u32 {
    cs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl RingInner {
    fn kind_add(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => ((a as u64 + b as u64) % *n as u64) as u32,
            Kind::PolyQuot { p, deg, .. } => {
                let x = digits(a, *p, *deg);
                let y = digits(b, *p, *deg);
                let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                undigits(&s, *p)
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| {
                    let n = f.inner.size;
                    f.add_raw((a / s) % n, (b / s) % n) * s
                })
                .sum(),
            Kind::Quotient {
                base,
                class_of,
                reps,
            } => class_of[base.add_raw(reps[a as usize], reps[b as usize]) as usize],
        }
    }

    fn kind_mul(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => ((a as u64 * b as u64) % *n as u64) as u32,
            Kind::PolyQuot { p, modulus, deg } => {
                let (p, deg) = (*p as u64, *deg);
                let x = digits(a, p as u32, deg);
                let y = digits(b, p as u32, deg);
                let mut prod = vec![0u64; 2 * deg - 1];
                for (i, &u) in x.iter().enumerate() {
                    for (j, &v) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
                    }
                }
                // x^deg = -(modulus[0] + ... + modulus[deg-1] x^(deg-1))
                for top in (deg..prod.len()).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (j, &m) in modulus[..deg].iter().enumerate() {
                        let k = top - deg + j;
                        prod[k] = (prod[k] + (p - c) * m as u64) % p;
                    }
                }
                let low: Vec<u32> = prod[..deg].iter().map(|&c| c as u32).collect();
                undigits(&low, p as u32)
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| {
                    let n = f.inner.size;
                    f.mul_raw((a / s) % n, (b / s) % n) * s
                })
                .sum(),
            Kind::Quotient {
                base,
                class_of,
                reps,
            } => class_of[base.mul_raw(reps[a as usize], reps[b as usize]) as usize],
        }
    }

    fn kind_neg(&self, a: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => (n - a) % n,
            Kind::PolyQuot { p, deg, .. } => {
                let x = digits(a, *p, *deg);
                let s: Vec<u32> = x.iter().map(|u| (p - u) % p).collect();
                undigits(&s, *p)
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.neg_raw((a / s) % f.inner.size) * s)
                .sum(),
            Kind::Quotient {
                base,
                class_of,
                reps,
            } => class_of[base.neg_raw(reps[a as usize]) as usize],
        }
    }
}
