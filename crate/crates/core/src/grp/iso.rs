use std::fmt;

use super::Group;

/// Isomorphism type from a small catalog, recognized by order, abelianness and
/// element-order statistics. Within the catalog these invariants separate
/// isomorphism classes; anything else is reported as `Other` with its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IsoType {
    Trivial,
    C2,
    C3,
    C4,
    C2xC2,
    C5,
    C6,
    C7,
    C8,
    C9,
    C3xC3,
    S3,
    D8,
    Q8,
    SD16,
    Other {
        order: u64,
        abelian: bool,
        fingerprint: Vec<(u64, u64)>,
    },
}

impl IsoType {
    pub fn of(group: &Group) -> IsoType {
        let order = group.order();
        let abelian = group.is_abelian();
        let stats = group.order_statistics();
        let count = |o: u64| {
            stats
                .iter()
                .find(|(k, _)| *k == o)
                .map(|(_, c)| *c)
                .unwrap_or(0)
        };
        let has = |o: u64| count(o) > 0;
        let known = match order {
            1 => Some(IsoType::Trivial),
            2 => Some(IsoType::C2),
            3 => Some(IsoType::C3),
            5 => Some(IsoType::C5),
            7 => Some(IsoType::C7),
            4 if has(4) => Some(IsoType::C4),
            4 => Some(IsoType::C2xC2),
            6 if abelian => Some(IsoType::C6),
            6 => Some(IsoType::S3),
            8 if has(8) => Some(IsoType::C8),
            8 if !abelian && count(2) == 5 => Some(IsoType::D8),
            8 if !abelian && count(2) == 1 => Some(IsoType::Q8),
            9 if has(9) => Some(IsoType::C9),
            9 => Some(IsoType::C3xC3),
            16 if !abelian && stats == [(1, 1), (2, 5), (4, 6), (8, 4)] => Some(IsoType::SD16),
            _ => None,
        };
        known.unwrap_or(IsoType::Other {
            order,
            abelian,
            fingerprint: stats,
        })
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsoType::Trivial => "1",
            IsoType::C2 => "C2",
            IsoType::C3 => "C3",
            IsoType::C4 => "C4",
            IsoType::C2xC2 => "C2xC2",
            IsoType::C5 => "C5",
            IsoType::C6 => "C6",
            IsoType::C7 => "C7",
            IsoType::C8 => "C8",
            IsoType::C9 => "C9",
            IsoType::C3xC3 => "C3xC3",
            IsoType::S3 => "S3",
            IsoType::D8 => "D8",
            IsoType::Q8 => "Q8",
            IsoType::SD16 => "SD16",
            IsoType::Other {
                order,
                abelian,
                fingerprint,
            } => {
                write!(f, "other({order},{}", if *abelian { "ab" } else { "nonab" })?;
                for (o, c) in fingerprint {
                    write!(f, ",{o}:{c}")?;
                }
                return write!(f, ")");
            }
        };
        f.write_str(s)
    }
}
