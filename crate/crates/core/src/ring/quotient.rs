use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, Ring, RingDescriptor};

/// `R/I` together with the canonical surjection `f: R -> R/I`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Ring,
    target: Ring,
}

/// Builds `R/I` for a proper ideal `I`. The quotient's canonical coset
/// representatives are the minimal members of each coset.
pub fn quotient_ring(ring: &Ring, ideal: &Ideal) -> Result<QuotientMap> {
    if ideal.ring() != ring {
        return Err(crate::RingError::MixedRings.into());
    }
    if !ideal.is_proper() {
        return Err(Error::Domain(
            "quotient by the unit ideal is the zero ring".into(),
        ));
    }
    let gens: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| g.index() as u32)
        .collect();
    let desc = RingDescriptor::Quotient {
        base: Box::new(ring.descriptor().clone()),
        generators: ideal
            .generators()
            .iter()
            .map(|&g| ring.literal(g))
            .collect(),
    };
    let target = Ring::quotient_by(ring, &gens, desc)?;
    Ok(QuotientMap {
        source: ring.clone(),
        target,
    })
}

impl QuotientMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn quotient(&self) -> &Ring {
        &self.target
    }

    fn class_of(&self) -> &[u32] {
        self.target
            .quotient_parts()
            .expect("target of a quotient map is a quotient ring")
            .1
    }

    /// `f(r)`.
    pub fn project(&self, r: Elem) -> Elem {
        assert!(self.source.contains(r), "element is not in the source ring");
        self.target.wrap(self.class_of()[r.index()])
    }

    /// `f(J)` for an ideal `J` of the source ring.
    pub fn image(&self, ideal: &Ideal) -> Result<Ideal> {
        let gens: Vec<Elem> = ideal
            .generators()
            .iter()
            .map(|&g| self.project(g))
            .collect();
        Ok(Ideal::generated(&self.target, &gens)?)
    }

    /// `f^{-1}(S) = { r : f(r) ∈ S }` for an ideal `S` of the quotient.
    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring() != &self.target {
            return Err(crate::RingError::MixedRings.into());
        }
        let class_of = self.class_of();
        let mut members = FixedBitSet::with_capacity(self.source.size());
        for (r, &c) in class_of.iter().enumerate() {
            if ideal.contains_raw(c) {
                members.insert(r);
            }
        }
        Ok(Ideal::from_members(&self.source, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;

    #[test]
    fn zmod12_mod_4_partitions_into_cosets_of_three() {
        let z = Ring::parse("Zmod:12").unwrap();
        let i = Ideal::parse(&z, "(4)").unwrap();
        let q = quotient_ring(&z, &i).unwrap();
        assert_eq!(q.quotient().size(), 4);
        assert_eq!(q.quotient().to_string(), "Quotient:{ring:Zmod:12,gens:[4]}");
        // oracle: residues mod 4 partition 0..12 into classes of size 3
        let mut counts = [0usize; 4];
        for r in z.elements() {
            let c = q.project(r).index();
            counts[c] += 1;
            assert_eq!(
                q.quotient().render(q.project(r)),
                (r.index() % 4).to_string()
            );
        }
        assert_eq!(counts, [3, 3, 3, 3]);
    }

    #[test]
    fn quotient_by_zero_is_identity_like() {
        let z = Ring::parse("Zmod:6").unwrap();
        let q = quotient_ring(&z, &Ideal::zero(&z)).unwrap();
        assert_eq!(q.quotient().size(), 6);
        for r in z.elements() {
            assert_eq!(q.project(r).index(), r.index());
        }
    }

    #[test]
    fn zmod8_mod_2_is_a_field() {
        let z = Ring::parse("Zmod:8").unwrap();
        let q = quotient_ring(&z, &Ideal::parse(&z, "(2)").unwrap()).unwrap();
        let f = q.quotient();
        assert_eq!(f.size(), 2);
        for a in f.elements().filter(|&a| !f.is_zero(a)) {
            assert!(f.elements().any(|b| f.mul(a, b) == f.one()));
        }
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let z = Ring::parse("Zmod:6").unwrap();
        assert!(matches!(
            quotient_ring(&z, &Ideal::unit(&z)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn preimage_of_image_round_trips_on_ideals() {
        let z = Ring::parse("Zmod:24").unwrap();
        let q = quotient_ring(&z, &Ideal::parse(&z, "(6)").unwrap()).unwrap();
        for s in enumerate_ideals(q.quotient(), 64).unwrap() {
            let back = q.image(&q.preimage(&s).unwrap()).unwrap();
            assert_eq!(back, s);
        }
    }
}
