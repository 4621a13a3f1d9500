use serde::{Deserialize, Serialize};

/// Slot positions of a PD quadruple, counterclockwise from the incoming
/// under-strand.
pub const SLOT_UNDER_IN: usize = 0;

/// Direction the over-strand runs through the crossing, in terms of the
/// PD slots `b` (index 1) and `d` (index 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OverDir {
    /// Over-strand enters at `d` and leaves at `b`: a positive crossing.
    DToB,
    /// Over-strand enters at `b` and leaves at `d`: a negative crossing.
    BToD,
}

impl OverDir {
    pub fn flipped(self) -> Self {
        match self {
            OverDir::DToB => OverDir::BToD,
            OverDir::BToD => OverDir::DToB,
        }
    }
}

/// Crossing sign under the right-hand rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One crossing of a PD code.
///
/// `arcs` is the quadruple `[a, b, c, d]` listed counterclockwise starting at
/// the incoming under-strand, so the under-strand always runs `a -> c`. The
/// over-strand occupies `b` and `d`; which of the two is incoming is the only
/// orientation datum stored, and the sign is derived from it: the crossing is
/// positive exactly when the over-strand enters at `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    arcs: [u32; 4],
    over: OverDir,
}

impl Crossing {
    pub fn new(arcs: [u32; 4], over: OverDir) -> Self {
        Crossing { arcs, over }
    }

    /// Builds a crossing from its strand roles and sign.
    pub fn from_roles(under_in: u32, under_out: u32, over_in: u32, over_out: u32, sign: Sign) -> Self {
        match sign {
            Sign::Positive => Crossing {
                arcs: [under_in, over_out, under_out, over_in],
                over: OverDir::DToB,
            },
            Sign::Negative => Crossing {
                arcs: [under_in, over_in, under_out, over_out],
                over: OverDir::BToD,
            },
        }
    }

    /// A one-crossing kink: the strand enters on `input`, runs once around
    /// `loop_arc` and leaves on `output`, passing under first.
    pub fn kink(input: u32, loop_arc: u32, output: u32, sign: Sign) -> Self {
        Crossing::from_roles(input, loop_arc, loop_arc, output, sign)
    }

    pub fn arcs(&self) -> [u32; 4] {
        self.arcs
    }

    pub fn over_dir(&self) -> OverDir {
        self.over
    }

    pub fn sign(&self) -> Sign {
        match self.over {
            OverDir::DToB => Sign::Positive,
            OverDir::BToD => Sign::Negative,
        }
    }

    pub fn under_in(&self) -> u32 {
        self.arcs[0]
    }

    pub fn under_out(&self) -> u32 {
        self.arcs[2]
    }

    pub fn over_in(&self) -> u32 {
        self.arcs[self.over_in_slot()]
    }

    pub fn over_out(&self) -> u32 {
        self.arcs[self.over_out_slot()]
    }

    pub fn over_in_slot(&self) -> usize {
        match self.over {
            OverDir::DToB => 3,
            OverDir::BToD => 1,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        match self.over {
            OverDir::DToB => 1,
            OverDir::BToD => 3,
        }
    }

    /// True when the arc occupying `slot` enters the crossing there.
    pub fn is_incoming_slot(&self, slot: usize) -> bool {
        slot == SLOT_UNDER_IN || slot == self.over_in_slot()
    }

    /// The slot on the same strand across the crossing.
    pub fn opposite_slot(slot: usize) -> usize {
        (slot + 2) % 4
    }

    pub fn is_over_slot(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Same crossing with every arc label passed through `f`.
    pub fn relabeled(&self, mut f: impl FnMut(u32) -> u32) -> Self {
        Crossing {
            arcs: self.arcs.map(&mut f),
            over: self.over,
        }
    }

    /// The crossing with the under-strand's orientation reversed. The
    /// geometric picture is unchanged, so the quadruple is re-read starting
    /// from the old outgoing under-slot and the sign flips.
    pub fn reverse_under(&self) -> Self {
        let [a, b, c, d] = self.arcs;
        Crossing {
            arcs: [c, d, a, b],
            over: self.over.flipped(),
        }
    }

    pub fn reverse_over(&self) -> Self {
        Crossing {
            arcs: self.arcs,
            over: self.over.flipped(),
        }
    }

    /// Swaps which strand passes over, keeping both orientations.
    pub fn switched(&self) -> Self {
        let [a, b, c, d] = self.arcs;
        match self.over {
            OverDir::DToB => Crossing {
                arcs: [d, a, b, c],
                over: OverDir::BToD,
            },
            OverDir::BToD => Crossing {
                arcs: [b, c, d, a],
                over: OverDir::DToB,
            },
        }
    }

    /// The monogon arc of a Reidemeister-1 kink, if this crossing is one:
    /// some label occupies two cyclically adjacent slots.
    pub fn kink_loop(&self) -> Option<u32> {
        (0..4)
            .filter(|&i| self.arcs[i] == self.arcs[(i + 1) % 4])
            .map(|i| self.arcs[i])
            .min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink_signs_follow_slot_order() {
        assert_eq!(Crossing::new([1, 1, 2, 2], OverDir::DToB).sign(), Sign::Positive);
        let pos = Crossing::kink(1, 2, 1, Sign::Positive);
        assert_eq!(pos.arcs(), [1, 1, 2, 2]);
        let neg = Crossing::kink(1, 2, 1, Sign::Negative);
        assert_eq!(neg.arcs(), [1, 2, 2, 1]);
        assert_eq!(neg.sign(), Sign::Negative);
    }

    #[test]
    fn roles_round_trip() {
        for sign in [Sign::Positive, Sign::Negative] {
            let c = Crossing::from_roles(1, 2, 3, 4, sign);
            assert_eq!((c.under_in(), c.under_out(), c.over_in(), c.over_out()), (1, 2, 3, 4));
            assert_eq!(c.sign(), sign);
        }
    }

    #[test]
    fn reversal_and_switch() {
        let c = Crossing::from_roles(1, 2, 3, 4, Sign::Positive);
        let ru = c.reverse_under();
        assert_eq!((ru.under_in(), ru.under_out(), ru.over_in(), ru.over_out()), (2, 1, 3, 4));
        assert_eq!(ru.sign(), Sign::Negative);
        let both = c.reverse_under().reverse_over();
        assert_eq!(both.sign(), Sign::Positive);
        let s = c.switched();
        assert_eq!((s.under_in(), s.under_out(), s.over_in(), s.over_out()), (3, 4, 1, 2));
        assert_eq!(s.sign(), Sign::Negative);
        assert_eq!(s.switched(), c);
    }
}
