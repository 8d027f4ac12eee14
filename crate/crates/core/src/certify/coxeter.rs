//! The eleven Coxeter tetrahedra of the 3-sphere.
//!
//! A Coxeter tetrahedron is a fundamental domain of its reflection group `W`,
//! so its volume is `2π²/|W|`; tests recompute `|W|` from invariant degrees.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::exact::{CyclotomicNumber, RationalAngle};
use crate::ring::leading_minor;

type Q = Ratio<i64>;

/// Volume coefficient of π², possibly depending on the dihedral parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VolumeRule {
    Constant(#[serde(with = "crate::exact::angle::ratio_serde")] Q),
    /// `1/(2kl)` for the product of two dihedral groups.
    TwoDihedral,
    /// `1/(4k)` for a dihedral group times two reflections.
    OneDihedral,
}

impl VolumeRule {
    /// `k`, `l` may be rational; they are ignored by constant rows.
    pub fn eval(&self, k: Q, l: Q) -> Q {
        match *self {
            VolumeRule::Constant(v) => v,
            VolumeRule::TwoDihedral => (k * l * 2).recip(),
            VolumeRule::OneDihedral => (k * 4).recip(),
        }
    }

    pub fn text(&self) -> String {
        match self {
            VolumeRule::Constant(v) => crate::exact::angle::format_ratio(v),
            VolumeRule::TwoDihedral => "1/(2kl)".into(),
            VolumeRule::OneDihedral => "1/(4k)".into(),
        }
    }
}

/// Branch label of a diagram edge; `K`, `L` are the free dihedral orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    Fixed(u32),
    K,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterEntry {
    pub index: u8,
    pub name: String,
    /// Diagram edges `(i, j, m)`: facets `i` and `j` meet at angle `π/m`.
    /// Missing pairs are orthogonal.
    pub edges: Vec<(usize, usize, Label)>,
    pub volume: VolumeRule,
}

impl CoxeterEntry {
    pub fn is_parametric(&self) -> bool {
        !matches!(self.volume, VolumeRule::Constant(_))
    }

    /// Dihedral angles `π/m` between facets, with `k`, `l` substituted.
    pub fn dihedral_angles(&self, k: Q, l: Q) -> [[RationalAngle; 4]; 4] {
        let mut out = [[RationalAngle::half_pi(); 4]; 4];
        for &(i, j, label) in &self.edges {
            let m = match label {
                Label::Fixed(m) => Q::from_integer(m as i64),
                Label::K => k,
                Label::L => l,
            };
            let a = RationalAngle::from_ratio(m.recip());
            out[i][j] = a;
            out[j][i] = a;
        }
        out
    }

    /// Entries `-cos θ_ij` off the diagonal, 1 on it.
    pub fn gram(&self, k: Q, l: Q) -> Vec<Vec<CyclotomicNumber>> {
        let ang = self.dihedral_angles(k, l);
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { CyclotomicNumber::one() } else { -CyclotomicNumber::cos_pi(ang[i][j]) })
                    .collect()
            })
            .collect()
    }

    /// Exact signs of the four leading principal minors.
    pub fn minor_signs(&self, k: Q, l: Q) -> [i8; 4] {
        let g = self.gram(k, l);
        [1, 2, 3, 4].map(|n| leading_minor(&g, n).sign().expect("Gram minors are real"))
    }
}

pub fn coxeter_catalog() -> Vec<CoxeterEntry> {
    use Label::{Fixed, K, L};
    let c = |n: i64, d: i64| VolumeRule::Constant(Q::new(n, d));
    let f = Fixed;
    let rows: [(&str, Vec<(usize, usize, Label)>, VolumeRule); 11] = [
        ("A4", vec![(0, 1, f(3)), (1, 2, f(3)), (2, 3, f(3))], c(1, 60)),
        ("B4", vec![(0, 1, f(3)), (1, 2, f(3)), (2, 3, f(4))], c(1, 192)),
        ("D4", vec![(0, 1, f(3)), (0, 2, f(3)), (0, 3, f(3))], c(1, 96)),
        ("H4", vec![(0, 1, f(5)), (1, 2, f(3)), (2, 3, f(3))], c(1, 7200)),
        ("F4", vec![(0, 1, f(3)), (1, 2, f(4)), (2, 3, f(3))], c(1, 576)),
        ("A3xA1", vec![(0, 1, f(3)), (1, 2, f(3))], c(1, 24)),
        ("B3xA1", vec![(0, 1, f(4)), (1, 2, f(3))], c(1, 48)),
        ("H3xA1", vec![(0, 1, f(5)), (1, 2, f(3))], c(1, 120)),
        ("I2(k)xI2(l)", vec![(0, 1, K), (2, 3, L)], VolumeRule::TwoDihedral),
        ("I2(k)xA1^2", vec![(0, 1, K)], VolumeRule::OneDihedral),
        ("A1^4", vec![], c(1, 8)),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(i, (name, edges, volume))| CoxeterEntry { index: i as u8 + 1, name: name.into(), edges, volume })
        .collect()
}

/// `index,name,volume` rows, the volume as a coefficient of π².
pub fn coxeter_csv(entries: &[CoxeterEntry]) -> String {
    let mut out = String::from("index,name,volume\n");
    for e in entries {
        out.push_str(&format!("{},{},{}\n", e.index, e.name, e.volume.text()));
    }
    out
}
