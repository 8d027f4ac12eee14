use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{FamilyError, FamilySpec, Params};
use crate::exact::angle::format_ratio;
use crate::exact::RationalAngle;
use crate::geometry::{is_realizable, volume, PythagoreanQuadruple, VolumeCoefficient};

type Q = Ratio<i64>;

/// How a quadruple is matched against a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MembershipRule {
    /// Closed domain, any of the four `p ↔ q`, `r ↔ s` arrangements, and a
    /// positive definite instance.
    Domain,
    /// On the family's curve with `p`, `q` in printed order, `r ↔ s` allowed,
    /// any parameter value. This is the rule that reproduces the sporadic table.
    #[default]
    PrintedCurve,
}

/// Solves `forms(params) = target` exactly; `None` when inconsistent or
/// under-determined.
fn solve(f: &FamilySpec, target: [RationalAngle; 4]) -> Option<Params> {
    let rows: Vec<(Q, Q, Q)> = f
        .angles
        .iter()
        .zip(target)
        .map(|(form, x)| (form.t, form.u, x.ratio() - form.c))
        .collect();
    let params = if f.dimension() == 1 {
        let &(b, _, rhs) = rows.iter().find(|r| !r.0.is_zero())?;
        Params::t(rhs / b)
    } else {
        let mut found = None;
        'outer: for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let (a1, b1, c1) = rows[i];
                let (a2, b2, c2) = rows[j];
                let det = a1 * b2 - a2 * b1;
                if !det.is_zero() {
                    found = Some(Params::tu((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det));
                    break 'outer;
                }
            }
        }
        found?
    };
    rows.iter().all(|&(b, g, rhs)| b * params.t + g * params.u == rhs).then_some(params)
}

/// Instance is a genuine tetrahedron: angles in `(0, π)` and positive definite Gram.
fn valid_instance(f: &FamilySpec, p: Params) -> bool {
    let [a, b, c, d] = f.angles_at(p);
    match PythagoreanQuadruple::new(a, b, c, d) {
        Ok(q) => is_realizable(&q).realizable(),
        Err(_) => false,
    }
}

/// Parameters placing `q` on family `f` under `rule`, if any.
pub fn member_of(q: &PythagoreanQuadruple, f: &FamilySpec, rule: MembershipRule) -> Option<Params> {
    let PythagoreanQuadruple { p, q: qq, r, s } = *q;
    let targets: &[[RationalAngle; 4]] = match rule {
        MembershipRule::Domain => &[[p, qq, r, s], [p, qq, s, r], [qq, p, r, s], [qq, p, s, r]],
        MembershipRule::PrintedCurve => &[[p, qq, r, s], [p, qq, s, r]],
    };
    targets.iter().find_map(|&t| {
        let params = solve(f, t)?;
        match rule {
            MembershipRule::PrintedCurve => Some(params),
            MembershipRule::Domain => {
                (f.domain.contains(params) && valid_instance(f, params)).then_some(params)
            }
        }
    })
}

/// Canonical quadruple and volume at `params`; the polynomial volume is
/// cross-checked against the angle formula with its hypotheses.
pub fn instantiate(f: &FamilySpec, params: Params) -> Result<(PythagoreanQuadruple, VolumeCoefficient), FamilyError> {
    if !f.domain.contains(params) {
        return Err(FamilyError::OutOfDomain { family: f.id, t: format_ratio(&params.t), u: format_ratio(&params.u) });
    }
    let degenerate = |reason: String| FamilyError::Degenerate { family: f.id, reason };
    let [a, b, c, d] = f.angles_at(params);
    let quad = PythagoreanQuadruple::new(a, b, c, d).map_err(|e| degenerate(e.to_string()))?;
    let vol = volume(&quad).map_err(|e| degenerate(e.to_string()))?;
    let poly = f.volume.eval(params.t, params.u);
    if poly != vol.value {
        return Err(FamilyError::VolumeMismatch {
            family: f.id,
            table: format_ratio(&poly),
            derived: format_ratio(&vol.value),
        });
    }
    Ok((quad, vol))
}
