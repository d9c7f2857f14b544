//! The monodromy group of a flag system: the permutation group on flags
//! generated by the three adjacency involutions.

use thiserror::Error;

use crate::flags::{FlagSystem, MapError};
use crate::perm::{CapExceeded, Perm, PermGroup};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("flag system fails validation: {0:?}")]
    InvalidFlagSystem(crate::flags::ValidationReport),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
}

/// The monodromy group, keeping the named generators r0, r1, r2 alongside
/// the stabilizer chain built from them.
pub struct MonodromyGroup {
    group: PermGroup,
    gens: [Perm; 3],
    flag_count: usize,
}

impl MonodromyGroup {
    /// Builds the monodromy group of a validated flag system.
    pub fn new(fs: &FlagSystem) -> Result<MonodromyGroup, MonodromyError> {
        let report = fs.validate();
        if !report.all_pass() {
            return Err(MonodromyError::InvalidFlagSystem(report));
        }
        Ok(Self::new_unchecked(fs))
    }

    pub(crate) fn new_unchecked(fs: &FlagSystem) -> MonodromyGroup {
        let gens = fs.generators().clone();
        let group = PermGroup::from_generators(fs.flag_count(), gens.to_vec());
        MonodromyGroup {
            group,
            gens,
            flag_count: fs.flag_count(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn flag_count(&self) -> usize {
        self.flag_count
    }

    /// The named generator images of a, b, c (= r0, r1, r2).
    pub fn generators(&self) -> &[Perm; 3] {
        &self.gens
    }

    pub fn evaluate(&self, word: &Word) -> Perm {
        word.evaluate_in(&self.gens)
    }

    /// The parabolic subgroup generated by the listed adjacency involutions.
    pub fn parabolic(&self, which: &[usize]) -> PermGroup {
        PermGroup::from_generators(
            self.flag_count,
            which.iter().map(|&i| self.gens[i].clone()).collect(),
        )
    }

    /// The stabilizer of one flag; by transitivity its order is
    /// |Mon| / flag count.
    pub fn flag_stabilizer(&self, flag: usize) -> PermGroup {
        self.group.point_stabilizer(flag)
    }

    /// The string intersection condition: (r0·r2)² = id and
    /// ⟨r0, r1⟩ ∩ ⟨r1, r2⟩ = ⟨r1⟩.
    pub fn string_condition(&self, enum_cap: usize) -> Result<bool, CapExceeded> {
        let r0r2 = self.gens[0].compose(&self.gens[2]);
        if !r0r2.compose(&r0r2).is_identity() {
            return Ok(false);
        }
        let left = self.parabolic(&[0, 1]);
        let right = self.parabolic(&[1, 2]);
        let meet = PermGroup::intersection(&left, &right, enum_cap)?;
        let r1_group = self.parabolic(&[1]);
        if meet.order() != r1_group.order() {
            return Ok(false);
        }
        Ok(meet.generators().iter().all(|g| r1_group.contains(g)))
    }
}

impl std::fmt::Debug for MonodromyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MonodromyGroup(flags={}, order={})",
            self.flag_count,
            self.order()
        )
    }
}

/// p = order of r0·r1 (lcm of face co-degrees), q = order of r1·r2 (lcm of
/// vertex degrees).
pub fn schlafli_type(fs: &FlagSystem) -> (u64, u64) {
    let r = fs.generators();
    (r[0].compose(&r[1]).order(), r[1].compose(&r[2]).order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::PlatonicSolid;
    use crate::DEFAULT_ENUM_CAP;
    use num_integer::Integer;

    #[test]
    fn prism_monodromy_orders() {
        let m3 = MonodromyGroup::new(&FlagSystem::prism(3).unwrap()).unwrap();
        assert_eq!(m3.order(), 1296);
        let m4 = MonodromyGroup::new(&FlagSystem::prism(4).unwrap()).unwrap();
        assert_eq!(m4.order(), 48);
        let m5 = MonodromyGroup::new(&FlagSystem::prism(5).unwrap()).unwrap();
        assert_eq!(m5.order(), 6000);
    }

    #[test]
    fn antiprism_monodromy_orders() {
        let m4 = MonodromyGroup::new(&FlagSystem::antiprism(4).unwrap()).unwrap();
        assert_eq!(m4.order(), 12288);
        let m5 = MonodromyGroup::new(&FlagSystem::antiprism(5).unwrap()).unwrap();
        assert_eq!(m5.order(), 30000);
    }

    #[test]
    fn regular_maps_have_order_equal_to_flag_count() {
        for solid in PlatonicSolid::ALL {
            let fs = FlagSystem::platonic(solid);
            let m = MonodromyGroup::new(&fs).unwrap();
            assert_eq!(m.order(), fs.flag_count() as u64, "{solid}");
        }
    }

    #[test]
    fn schlafli_types() {
        assert_eq!(schlafli_type(&FlagSystem::prism(5).unwrap()), (20, 3));
        assert_eq!(schlafli_type(&FlagSystem::antiprism(4).unwrap()), (12, 4));
        assert_eq!(
            schlafli_type(&FlagSystem::platonic(PlatonicSolid::Cube)),
            (4, 3)
        );
        for n in 3..=12 {
            let fs = FlagSystem::prism(n).unwrap();
            assert_eq!(schlafli_type(&fs), (4u64.lcm(&(n as u64)), 3));
        }
        for n in 3..=8 {
            let fs = FlagSystem::antiprism(n).unwrap();
            assert_eq!(schlafli_type(&fs), (3u64.lcm(&(n as u64)), 4));
        }
    }

    #[test]
    fn element_order_of_ab_in_prism_five() {
        let fs = FlagSystem::prism(5).unwrap();
        let r = fs.generators();
        // faces are squares and pentagons, so r0·r1 has cycles of length 4 and 5
        assert_eq!(r[0].compose(&r[1]).order(), 20);
    }

    #[test]
    fn string_condition_holds_for_polyhedra() {
        for n in [3usize, 5, 8] {
            let m = MonodromyGroup::new(&FlagSystem::prism(n).unwrap()).unwrap();
            assert!(m.string_condition(DEFAULT_ENUM_CAP).unwrap(), "prism {n}");
        }
        let m = MonodromyGroup::new(&FlagSystem::antiprism(4).unwrap()).unwrap();
        assert!(m.string_condition(DEFAULT_ENUM_CAP).unwrap());
    }

    #[test]
    fn string_condition_fails_when_r0_equals_r1() {
        // artificial system: r0 = r1 makes the parabolic intersection too big
        let fs = FlagSystem::prism(3).unwrap();
        let r = fs.generators();
        let fake = crate::flags::FlagSystem::from_parts(
            [r[1].clone(), r[1].clone(), r[2].clone()],
            fs.labels().to_vec(),
            crate::flags::MapKind::FaceList,
        );
        let m = MonodromyGroup::new_unchecked(&fake);
        assert!(!m.string_condition(DEFAULT_ENUM_CAP).unwrap());
    }

    #[test]
    fn parabolic_intersection_is_r1() {
        let m = MonodromyGroup::new(&FlagSystem::prism(5).unwrap()).unwrap();
        let meet = PermGroup::intersection(
            &m.parabolic(&[0, 1]),
            &m.parabolic(&[1, 2]),
            DEFAULT_ENUM_CAP,
        )
        .unwrap();
        assert_eq!(meet.order(), 2);
        assert!(meet.contains(&m.generators()[1]));
    }

    #[test]
    fn flag_stabilizer_orders() {
        let m12 = MonodromyGroup::new(&FlagSystem::prism(12).unwrap()).unwrap();
        assert_eq!(m12.flag_stabilizer(0).order(), 9); // 1296 / 144
        let a12 = MonodromyGroup::new(&FlagSystem::antiprism(12).unwrap()).unwrap();
        assert_eq!(a12.flag_stabilizer(0).order(), 64); // 12288 / 192
        let cube = MonodromyGroup::new(&FlagSystem::platonic(PlatonicSolid::Cube)).unwrap();
        assert_eq!(cube.flag_stabilizer(0).order(), 1);
    }

    #[test]
    fn monodromy_rejects_invalid_systems() {
        let fs = FlagSystem::prism(3).unwrap();
        let broken = crate::flags::FlagSystem::from_parts(
            [
                Perm::identity(fs.flag_count()),
                fs.generators()[1].clone(),
                fs.generators()[2].clone(),
            ],
            fs.labels().to_vec(),
            crate::flags::MapKind::FaceList,
        );
        assert!(MonodromyGroup::new(&broken).is_err());
    }

    #[test]
    fn order_is_divisible_by_flag_count() {
        for n in 3..=8 {
            let fs = FlagSystem::prism(n).unwrap();
            let m = MonodromyGroup::new(&fs).unwrap();
            assert_eq!(m.order() % fs.flag_count() as u64, 0);
        }
    }
}
