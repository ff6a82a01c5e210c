use std::fmt;

use serde::{Deserialize, Serialize};

use super::{components, j_contains, regulars, same_point, Cluster, ClusterError};
use crate::arcs::ArcObject;
use crate::poset::Sign;
use crate::rational::{lift, rem, Q};

/// Which local configuration a mutation falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MutationCase {
    #[serde(rename = "1a")]
    C1a,
    #[serde(rename = "1b")]
    C1b,
    #[serde(rename = "1c")]
    C1c,
    #[serde(rename = "2a")]
    C2a,
    #[serde(rename = "2b")]
    C2b,
    #[serde(rename = "2c")]
    C2c,
    #[serde(rename = "zp")]
    Zp,
}

impl MutationCase {
    pub fn label(&self) -> &'static str {
        match self {
            MutationCase::C1a => "1a",
            MutationCase::C1b => "1b",
            MutationCase::C1c => "1c",
            MutationCase::C2a => "2a",
            MutationCase::C2b => "2b",
            MutationCase::C2c => "2c",
            MutationCase::Zp => "zp",
        }
    }

    /// The case the reverse mutation must fall into.
    pub fn partner(&self) -> MutationCase {
        match self {
            MutationCase::C1b => MutationCase::C2c,
            MutationCase::C2c => MutationCase::C1b,
            MutationCase::C2a => MutationCase::C2b,
            MutationCase::C2b => MutationCase::C2a,
            other => *other,
        }
    }

    /// Whether the exchange triangles have indecomposable middle terms.
    pub fn is_exceptional(&self) -> bool {
        matches!(self, MutationCase::C2a | MutationCase::C2b)
    }
}

impl fmt::Display for MutationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationOutcome {
    pub cluster: Cluster,
    pub index: usize,
    pub old: ArcObject,
    pub new: ArcObject,
    pub case: MutationCase,
    pub inverse_case: MutationCase,
}

impl MutationOutcome {
    /// `"1b→2c"` style label.
    pub fn case_label(&self) -> String {
        format!("{}→{}", self.case, self.inverse_case)
    }
}

pub(super) struct Local<'a> {
    c: &'a Cluster,
    per: Q,
}

impl<'a> Local<'a> {
    pub(super) fn new(c: &'a Cluster) -> Local<'a> {
        Local { c, per: c.model.period() }
    }

    /// `SE(a, b)` with `b` brought into `(a, a + period]`.
    pub(super) fn reg(&self, a: Q, b: Q) -> Result<ArcObject, ClusterError> {
        let b = lift(b - a, Q::from_integer(0), self.per) + a;
        Ok(self.c.disk().regular(a, b)?)
    }

    fn singular(&self, x: Q, sign: Sign) -> Result<ArcObject, ClusterError> {
        Ok(self.c.disk().singular(x, sign)?)
    }

    fn lp(&self, x: Q) -> Result<ArcObject, ClusterError> {
        Ok(self.c.disk().loop_at(x)?)
    }

    /// Interior endpoint of the maximal regulars properly inside `t`.
    fn split(&self, t: &ArcObject) -> Result<Q, ClusterError> {
        let (x, y) = interval(t);
        let inner: Vec<ArcObject> =
            regulars(self.c).into_iter().filter(|a| a != t && j_contains(self.per, t, a)).collect();
        let mut pts: Vec<Q> = Vec::new();
        for a in inner.iter().filter(|a| !inner.iter().any(|b| b != *a && j_contains(self.per, b, a))) {
            let (s, e) = interval(a);
            for v in [s, e] {
                let off = rem(v - x, self.per);
                if off != Q::from_integer(0) && off != y - x {
                    let v = rem(v, self.per);
                    if !pts.contains(&v) {
                        pts.push(v);
                    }
                }
            }
        }
        match pts.as_slice() {
            [z] => Ok(*z),
            _ => Err(ClusterError::Invalid(format!("{t} is not split by a unique point"))),
        }
    }

    pub(super) fn constructive(&self, t: &ArcObject) -> Result<(ArcObject, MutationCase), ClusterError> {
        let p2 = self.c.model.p == 2;
        let per = self.per;
        let comps = components(self.c);
        let bad = || ClusterError::Invalid(format!("no mutation rule applies to {t}"));
        match *t {
            ArcObject::Regular { x, y } => {
                let z = self.split(t)?;
                if !comps.contains(t) {
                    let outer: Vec<ArcObject> =
                        regulars(self.c).into_iter().filter(|a| a != t && j_contains(per, a, t)).collect();
                    let inner_most: Vec<&ArcObject> =
                        outer.iter().filter(|a| !outer.iter().any(|b| b != *a && j_contains(per, a, b))).collect();
                    let [outer] = inner_most.as_slice() else { return Err(bad()) };
                    let (a, d) = interval(outer);
                    let case = if p2 { MutationCase::C1a } else { MutationCase::Zp };
                    let new = if lift(x, a, per) == a { self.reg(z, d)? } else { self.reg(a, lift(z, a, per))? };
                    return Ok((new, case));
                }
                if !p2 {
                    let lp = self.c.arcs.iter().find_map(|a| match a {
                        ArcObject::Loop { x } => Some(*x),
                        _ => None,
                    });
                    let lp = lp.ok_or_else(bad)?;
                    if same_point(lp, x, per) {
                        return Ok((self.reg(lift(z, x, per), x + per)?, MutationCase::Zp));
                    }
                    if same_point(lp, y, per) {
                        return Ok((self.reg(y, lift(z, y, per))?, MutationCase::Zp));
                    }
                    return Err(bad());
                }
                let sing: Vec<(Q, Sign)> = singulars(self.c);
                let first = *sing.first().ok_or_else(bad)?;
                if sing.iter().all(|s| s.1 == first.1) {
                    return Ok((self.singular(z, first.1)?, MutationCase::C1b));
                }
                let one = Q::from_integer(1);
                if same_point(first.0, x, one) {
                    Ok((self.reg(lift(z, x, one), x + one)?, MutationCase::C1c))
                } else {
                    Ok((self.reg(y, lift(z, y, one))?, MutationCase::C1c))
                }
            }
            ArcObject::Loop { x } => {
                let before = comps.iter().find(|a| same_point(interval(a).1, x, per)).ok_or_else(bad)?;
                Ok((self.lp(interval(before).0)?, MutationCase::Zp))
            }
            ArcObject::Singular { x: z, sign } => {
                let one = Q::from_integer(1);
                if comps.len() >= 3 {
                    let i1 = comps.iter().find(|a| same_point(interval(a).1, z, one)).ok_or_else(bad)?;
                    let i2 = comps.iter().find(|a| same_point(interval(a).0, z, one)).ok_or_else(bad)?;
                    let start = interval(i1).0;
                    return Ok((self.reg(start, lift(interval(i2).1, start, one))?, MutationCase::C2c));
                }
                let others: Vec<(Q, Sign)> = singulars(self.c).into_iter().filter(|s| *s != (z, sign)).collect();
                let [other] = others.as_slice() else { return Err(bad()) };
                if other.0 == z {
                    let mut pts: Vec<Q> = Vec::new();
                    for a in &comps {
                        let (s, e) = interval(a);
                        for v in [rem(s, one), rem(e, one)] {
                            if v != z && !pts.contains(&v) {
                                pts.push(v);
                            }
                        }
                    }
                    let [y] = pts.as_slice() else { return Err(bad()) };
                    Ok((self.singular(*y, sign.flip())?, MutationCase::C2a))
                } else {
                    Ok((self.singular(other.0, sign.flip())?, MutationCase::C2b))
                }
            }
        }
    }
}

pub(super) fn interval(a: &ArcObject) -> (Q, Q) {
    match *a {
        ArcObject::Regular { x, y } => (x, y),
        ArcObject::Singular { x, .. } | ArcObject::Loop { x } => (x, x),
    }
}

fn singulars(c: &Cluster) -> Vec<(Q, Sign)> {
    c.arcs
        .iter()
        .filter_map(|a| match a {
            ArcObject::Singular { x, sign } => Some((*x, *sign)),
            _ => None,
        })
        .collect()
}

/// Every candidate outside `C` compatible with `C \ {T}`: the exhaustive second route.
pub fn mutation_oracle(c: &Cluster, t: &ArcObject) -> Vec<ArcObject> {
    let d = c.disk();
    let rest: Vec<ArcObject> = c.with_frozen().into_iter().filter(|a| a != t).collect();
    c.model
        .candidates()
        .into_iter()
        .filter(|x| !c.arcs.contains(x) && rest.iter().all(|a| d.compatible(a, x)))
        .collect()
}

fn check_target(c: &Cluster, t: &ArcObject) -> Result<usize, ClusterError> {
    if c.model.is_frozen(t) {
        return Err(ClusterError::Frozen(t.to_string()));
    }
    c.index_of(t).ok_or_else(|| ClusterError::Absent(t.to_string()))
}

/// Mutates `C` at `T`, replacing it in place with the unique other completion of `C \ {T}`.
///
/// The replacement is built from the local configuration and then checked against
/// [`mutation_oracle`].
pub fn mutate_object(c: &Cluster, t: &ArcObject) -> Result<MutationOutcome, ClusterError> {
    let d = c.disk();
    let t = d.canonical(t)?;
    let index = check_target(c, &t)?;
    let (new, case) = Local::new(c).constructive(&t)?;
    let oracle = mutation_oracle(c, &t);
    if oracle != [new] {
        return Err(ClusterError::OracleDisagreement {
            constructive: new.to_string(),
            oracle: oracle.iter().map(ToString::to_string).collect(),
        });
    }
    let mut arcs = c.arcs.clone();
    arcs[index] = new;
    let cluster = Cluster { model: c.model, arcs };
    let (_, inverse_case) = Local::new(&cluster).constructive(&new)?;
    Ok(MutationOutcome { cluster, index, old: t, new, case, inverse_case })
}

/// Mutation at a position of the cluster list.
pub fn mutate(c: &Cluster, index: usize) -> Result<MutationOutcome, ClusterError> {
    let t = *c.arcs.get(index).ok_or(ClusterError::Index(index))?;
    mutate_object(c, &t)
}
