use serde::Serialize;

use super::mutation::{interval, Local};
use super::{same_point, Cluster, ClusterError};
use crate::arcs::ArcObject;
use crate::rational::{lift, rem, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub object: ArcObject,
    pub multiplicity: u32,
}

/// A minimal left (or right) `add(C \ T)`-approximation, as summands with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Approximation {
    pub summands: Vec<Summand>,
}

impl Approximation {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self.summands.as_slice(), [Summand { multiplicity: 1, .. }])
    }

    pub fn objects(&self) -> Vec<ArcObject> {
        self.summands.iter().map(|s| s.object).collect()
    }
}

/// An exchange triangle `start → middle → end → start[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApproxTriangle {
    pub start: ArcObject,
    pub middle: Approximation,
    pub end: ArcObject,
}

/// Families of summands: `a` ends where `T` ends, `b` shares `T`'s start or wraps past it.
struct Split {
    a: Option<ArcObject>,
    b: Vec<ArcObject>,
}

impl Split {
    fn all(&self) -> Vec<ArcObject> {
        self.a.iter().copied().chain(self.b.iter().copied()).collect()
    }
}

fn min_by_key(v: Vec<(Q, ArcObject)>) -> Vec<ArcObject> {
    let Some(m) = v.iter().map(|e| e.0).min() else { return Vec::new() };
    let mut out: Vec<ArcObject> = v.into_iter().filter(|e| e.0 == m).map(|e| e.1).collect();
    out.sort();
    out
}

fn split_left(c: &Cluster, t: &ArcObject) -> Result<Split, ClusterError> {
    let per = c.model.period();
    let one = Q::from_integer(1);
    let rest: Vec<ArcObject> = c.with_frozen().into_iter().filter(|a| a != t).collect();
    let mut fam_a = Vec::new();
    let mut fam_b = Vec::new();
    match *t {
        ArcObject::Regular { x, y } => {
            for s in rest {
                match s {
                    ArcObject::Regular { x: sx, y: sy } => {
                        let a = lift(sx, x, per);
                        let b = a + (sy - sx);
                        if x < a && a < y && b == y {
                            fam_a.push((a, s));
                        } else if a == x && y < b && b < x + per {
                            fam_b.push((b, s));
                        } else if y <= a && b == x + per {
                            fam_b.push((a + per, s));
                        }
                    }
                    ArcObject::Singular { x: sx, .. } if same_point(sx, x, one) => fam_b.push((x + one, s)),
                    ArcObject::Loop { x: sx } if same_point(sx, x, per) => fam_b.push((x + per, s)),
                    _ => {}
                }
            }
            Ok(Split { a: min_by_key(fam_a).first().copied(), b: min_by_key(fam_b) })
        }
        ArcObject::Singular { x, sign } => {
            for s in rest {
                match s {
                    ArcObject::Regular { x: sx, y: sy } => {
                        let a = lift(sx, x, one);
                        if x < a && a + (sy - sx) == x + one {
                            fam_a.push((a, s));
                        }
                    }
                    ArcObject::Singular { x: sx, sign: ss } if ss == sign && sx != x => {
                        fam_b.push((lift(sx, x, one), s));
                    }
                    _ => {}
                }
            }
            let wa = fam_a.iter().map(|e| e.0).min().ok_or_else(|| ClusterError::NoCone(t.to_string()))?;
            let a = min_by_key(fam_a).first().copied();
            let b = match fam_b.iter().map(|e| e.0).min() {
                Some(wb) if wb < wa => min_by_key(fam_b),
                _ => Vec::new(),
            };
            Ok(Split { a, b })
        }
        ArcObject::Loop { x } => {
            for s in rest {
                if let ArcObject::Regular { x: sx, y: sy } = s {
                    let a = lift(sx, x, per);
                    if x < a && a + (sy - sx) == x + per {
                        fam_a.push((a, s));
                    }
                }
            }
            Ok(Split { a: min_by_key(fam_a).first().copied(), b: Vec::new() })
        }
    }
}

fn with_multiplicity(c: &Cluster, t: &ArcObject, objs: Vec<ArcObject>, left: bool) -> Approximation {
    let d = c.disk();
    let summands = objs
        .into_iter()
        .map(|s| {
            let h = if left { d.hom_dim(t, &s) } else { d.hom_dim(&s, t) };
            Summand { object: s, multiplicity: h / d.end_dim(&s) }
        })
        .collect();
    Approximation { summands }
}

fn check_member(c: &Cluster, t: &ArcObject) -> Result<(), ClusterError> {
    if c.index_of(t).is_none() {
        return Err(ClusterError::Absent(t.to_string()));
    }
    Ok(())
}

/// Minimal left `add(C ∪ frozen \ T)`-approximation `T → X`.
pub fn left_approximation(c: &Cluster, t: &ArcObject) -> Result<Approximation, ClusterError> {
    check_member(c, t)?;
    let objs = split_left(c, t)?.all();
    Ok(with_multiplicity(c, t, objs, true))
}

/// Minimal right approximation `Y → T`, obtained through the orientation reversal.
pub fn right_approximation(c: &Cluster, t: &ArcObject) -> Result<Approximation, ClusterError> {
    check_member(c, t)?;
    let d = c.disk();
    let objs: Vec<ArcObject> = split_left(&c.reflect(), &d.reflect(t))?.all().iter().map(|a| d.reflect(a)).collect();
    Ok(with_multiplicity(c, t, objs, false))
}

fn cocone_shift(a: ArcObject) -> ArcObject {
    match a {
        ArcObject::Singular { x, sign } => ArcObject::Singular { x, sign: sign.flip() },
        other => other,
    }
}

/// Cone of the basic morphism between two indecomposables.
fn cone1(l: &Local<'_>, per: Q, x: &ArcObject, y: &ArcObject) -> Result<ArcObject, ClusterError> {
    let one = Q::from_integer(1);
    let fail = || ClusterError::NoCone(format!("{x} → {y}"));
    match (*x, *y) {
        (ArcObject::Regular { x: s, y: e }, ArcObject::Regular { x: ys, y: ye }) => {
            let a = lift(ys, s, per);
            let b = a + (ye - ys);
            if a == s && b > e {
                l.reg(e, b)
            } else if b == s + per {
                l.reg(a, e + per)
            } else if b == e && a > s {
                l.reg(s, a)
            } else {
                Err(fail())
            }
        }
        (ArcObject::Regular { x: s, y: e }, ArcObject::Singular { x: p, sign }) if same_point(p, s, one) => {
            Ok(ArcObject::Singular { x: rem(e, one), sign })
        }
        (ArcObject::Regular { x: s, y: e }, ArcObject::Loop { x: p }) if same_point(p, s, per) => l.reg(e, s + per),
        (ArcObject::Singular { x: s, sign }, ArcObject::Singular { x: p, sign: t }) if sign == t => {
            l.reg(s, lift(p, s, one))
        }
        (ArcObject::Singular { x: s, sign }, ArcObject::Regular { x: ys, y: ye }) if same_point(ye, s, one) => {
            Ok(ArcObject::Singular { x: rem(ys, one), sign: sign.flip() })
        }
        (ArcObject::Loop { x: s }, ArcObject::Regular { x: ys, y: ye }) if same_point(ye, s, per) => {
            Ok(ArcObject::Loop { x: rem(ys, per) })
        }
        _ => Err(fail()),
    }
}

fn cone_split(c: &Cluster, t: &ArcObject, s: &Split) -> Result<ArcObject, ClusterError> {
    let l = Local::new(c);
    let per = c.model.period();
    match (&s.a, s.b.as_slice()) {
        (Some(a), []) | (None, [a]) => cone1(&l, per, t, a),
        (Some(a), [b]) => {
            let x = cocone_shift(cone1(&l, per, t, a)?);
            cone1(&l, per, &x, b)
        }
        (Some(a), [_, _]) if t.is_regular() => {
            let x = cocone_shift(cone1(&l, per, t, a)?);
            let (s, e) = interval(&x);
            l.reg(e, s + Q::from_integer(1))
        }
        _ => Err(ClusterError::NoCone(t.to_string())),
    }
}

/// Cone of the left approximation of `T`; equals the mutated object.
pub fn cone_of_approximation(c: &Cluster, t: &ArcObject) -> Result<ArcObject, ClusterError> {
    check_member(c, t)?;
    cone_split(c, t, &split_left(c, t)?)
}

/// The two exchange triangles `T → X → T* → T[1]` and `T* → Y → T → T*[1]`.
///
/// `T*` in each triangle is computed as a cone from the approximation, independently of
/// the mutation rules.
pub fn approximation_triangles(c: &Cluster, t: &ArcObject) -> Result<(ApproxTriangle, ApproxTriangle), ClusterError> {
    let left = left_approximation(c, t)?;
    let end = cone_of_approximation(c, t)?;
    let d = c.disk();
    let rc = c.reflect();
    let rt = d.reflect(t);
    let start = d.reflect(&cone_split(&rc, &rt, &split_left(&rc, &rt)?)?);
    let right = right_approximation(c, t)?;
    Ok((
        ApproxTriangle { start: *t, middle: left, end },
        ApproxTriangle { start, middle: right, end: *t },
    ))
}
