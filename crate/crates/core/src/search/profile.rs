use serde::{Deserialize, Serialize};

/// Denominator of a search angle; `None` stands for the angle 0 (denominator ∞).
pub type Den = Option<i64>;

pub const L0: [Den; 4] = [Some(1), Some(2), Some(3), None];
pub const L1: [i64; 2] = [3, 5];
pub const L2: [i64; 2] = [3, 7];
pub const L3: [i64; 3] = [3, 5, 15];

/// Which denominator combinations are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProfileRule {
    /// Per rational length: all four in `L0 ∪ L1`, or one term in `L0` and
    /// the other three all in `L2` or all in `L3`.
    PerLength,
    /// Any combination from the union of the lists.
    Union,
    /// Only `L0`.
    L0Only,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DenominatorProfile {
    pub rule: ProfileRule,
    /// Drops grid denominators above the cap.
    pub max_den: Option<i64>,
}

impl Default for DenominatorProfile {
    fn default() -> Self {
        Self::per_length()
    }
}

fn in_l0(d: Den) -> bool {
    L0.contains(&d)
}

fn in_list(d: Den, list: &[i64]) -> bool {
    d.is_some_and(|d| list.contains(&d))
}

impl DenominatorProfile {
    pub fn per_length() -> Self {
        DenominatorProfile { rule: ProfileRule::PerLength, max_den: None }
    }

    pub fn union() -> Self {
        DenominatorProfile { rule: ProfileRule::Union, max_den: None }
    }

    pub fn l0_only() -> Self {
        DenominatorProfile { rule: ProfileRule::L0Only, max_den: None }
    }

    /// Finite denominators used to build the angle grids.
    pub fn grid_denominators(&self) -> Vec<i64> {
        let all: &[i64] = match self.rule {
            ProfileRule::L0Only => &[1, 2, 3],
            _ => &[1, 2, 3, 5, 7, 15],
        };
        all.iter().copied().filter(|&d| self.max_den.map_or(true, |m| d <= m)).collect()
    }

    pub fn admits(&self, dens: [Den; 4]) -> bool {
        match self.rule {
            ProfileRule::Union => true,
            ProfileRule::L0Only => dens.iter().all(|&d| in_l0(d)),
            ProfileRule::PerLength => {
                if dens.iter().all(|&d| in_l0(d) || in_list(d, &L1)) {
                    return true;
                }
                (0..4).any(|i| {
                    let rest = (0..4).filter(|&j| j != i).map(|j| dens[j]);
                    in_l0(dens[i])
                        && (rest.clone().all(|d| in_list(d, &L2)) || rest.clone().all(|d| in_list(d, &L3)))
                })
            }
        }
    }
}
