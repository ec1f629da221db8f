//! Ideals of finite rings as materialized element sets.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result, RingError};
use crate::ring::{parse_ideal_literal, Elem, ElemLiteral, Ring};

/// An ideal of a finite ring.
///
/// Equality, hashing and ordering look at the element set only; the
/// generator list is whatever the ideal was built from (or a greedy
/// generating set for ideals computed from element sets).
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Elem>,
    members: FixedBitSet,
    len: usize,
}

impl Ideal {
    /// The ideal generated by `gens`; the empty list gives the zero ideal.
    pub fn generated(ring: &Ring, gens: &[Elem]) -> Result<Ideal, RingError> {
        for &g in gens {
            ring.owns(g)?;
        }
        let raw: Vec<u32> = gens.iter().map(|g| g.index() as u32).collect();
        let members = ring.span_raw(&raw);
        Ok(Ideal::with_generators(ring, gens.to_vec(), members))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::generated(ring, &[]).expect("empty generator list")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::generated(ring, &[ring.one()]).expect("one belongs to its ring")
    }

    /// Parses an ideal literal such as `(4)` or `((2,0),(0,1))`. `(0)` is
    /// the zero ideal in every ring kind.
    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        let lits = parse_ideal_literal(text)?;
        if lits == [ElemLiteral::Int(0)] {
            return Ok(Ideal::zero(ring));
        }
        let gens = lits
            .iter()
            .map(|l| ring.resolve(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::generated(ring, &gens)?)
    }

    fn with_generators(ring: &Ring, generators: Vec<Elem>, members: FixedBitSet) -> Ideal {
        let len = members.count_ones(..);
        Ideal {
            ring: ring.clone(),
            generators,
            members,
            len,
        }
    }

    /// Wraps a set already known to be an ideal, choosing generators greedily
    /// in canonical element order.
    pub(crate) fn from_members(ring: &Ring, members: FixedBitSet) -> Ideal {
        let mut generators = Vec::new();
        let mut covered = FixedBitSet::with_capacity(ring.size());
        covered.insert(0);
        for i in members.ones() {
            if !covered.contains(i) {
                generators.push(ring.wrap(i as u32));
                ring.absorb_principal(&mut covered, i as u32);
            }
        }
        debug_assert_eq!(covered, members);
        Ideal::with_generators(ring, generators, members)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.ring.contains(e) && self.members.contains(e.index())
    }

    #[inline]
    pub(crate) fn contains_raw(&self, index: u32) -> bool {
        self.members.contains(index as usize)
    }

    /// Members in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|i| self.ring.wrap(i as u32))
    }

    pub fn is_zero(&self) -> bool {
        self.len == 1
    }

    pub fn is_unit(&self) -> bool {
        self.len == self.ring.size()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.members.is_subset(&other.members)
    }

    /// `{ a : a^k ∈ I for some 1 <= k <= |R| }`.
    pub fn radical(&self) -> Ideal {
        let ring = &self.ring;
        let n = ring.size();
        let mut members = FixedBitSet::with_capacity(n);
        for a in 0..n as u32 {
            let mut power = a;
            for _ in 0..n {
                if self.contains_raw(power) {
                    members.insert(a as usize);
                    break;
                }
                power = ring.mul_raw(power, a);
            }
        }
        Ideal::from_members(ring, members)
    }

    /// The ideal generated by all products `g h` of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(RingError::MixedRings.into());
        }
        let ring = &self.ring;
        let mut gens: Vec<u32> = Vec::new();
        for g in &self.generators {
            for h in &other.generators {
                gens.push(ring.mul_raw(g.index() as u32, h.index() as u32));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(Ideal::from_members(ring, ring.span_raw(&gens)))
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::Domain(
                "ideal power exponent must be at least 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(RingError::MixedRings.into());
        }
        let mut members = self.members.clone();
        for g in &other.generators {
            self.ring.absorb_principal(&mut members, g.index() as u32);
        }
        Ok(Ideal::from_members(&self.ring, members))
    }

    /// `(I : x) = { a : a x ∈ I }`.
    pub fn colon(&self, x: Elem) -> Result<Ideal, RingError> {
        self.ring.owns(x)?;
        let ring = &self.ring;
        let x = x.index() as u32;
        let mut members = FixedBitSet::with_capacity(ring.size());
        for a in 0..ring.size() as u32 {
            if self.contains_raw(ring.mul_raw(a, x)) {
                members.insert(a as usize);
            }
        }
        Ok(Ideal::from_members(ring, members))
    }

    /// Text form `(g1,g2,...)`, `(0)` for the zero ideal.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<Elem> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| !self.ring.is_zero(g))
            .collect();
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.ring.render(*g))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|e| self.ring.render(e)).collect();
        write!(f, "Ideal{} = {{{}}}", self, elems.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.id().hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then the sorted element lists lexicographically.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .id()
            .cmp(&other.ring.id())
            .then(self.len.cmp(&other.len))
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

/// Every ideal of `ring` exactly once, ordered by size and then by element
/// set. Breadth-first from `(0)`, extending by one principal ideal at a time.
pub fn enumerate_ideals(ring: &Ring, cap: usize) -> Result<Vec<Ideal>> {
    if ring.size() > cap {
        return Err(Error::ResourceLimit {
            what: format!("ideal enumeration of {ring}"),
            needed: ring.size() as u128,
            cap: cap as u128,
        });
    }
    let mut zero = FixedBitSet::with_capacity(ring.size());
    zero.insert(0);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(zero.clone());
    queue.push_back(zero);
    while let Some(members) = queue.pop_front() {
        for x in 0..ring.size() {
            if members.contains(x) {
                continue;
            }
            let mut next = members.clone();
            ring.absorb_principal(&mut next, x as u32);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen
        .into_iter()
        .map(|m| Ideal::from_members(ring, m))
        .collect();
    ideals.sort();
    Ok(ideals)
}
