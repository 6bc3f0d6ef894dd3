use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{dot, format_vector, CartanLabel, RootType, Vector};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};
use crate::linalg::{LinearMap, SparseVec};

/// A validated root system with a positive system adapted to its highest root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    label: CartanLabel,
    ambient_dim: usize,
    roots: Vec<Vector>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    functional: Vector,
    highest: usize,
}

/// Builds the standard model of an admissible Cartan type.
pub fn build_root_system(label: CartanLabel) -> Result<RootSystem> {
    let (ambient, roots) = standard_roots(label);
    RootSystem::from_roots(label, ambient, roots)
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn signed_pairs(d: usize, limit: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..limit {
        for j in i + 1..limit {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; d];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

fn to_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}

/// `1/2 (+-1, ..., +-1)` in dimension `d`, for every sign pattern accepted by `keep`.
fn half_spinors(d: usize, keep: impl Fn(&[i64]) -> bool) -> Vec<Vector> {
    (0..1u32 << d)
        .map(|mask| {
            (0..d)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect::<Vec<i64>>()
        })
        .filter(|s| keep(s))
        .map(|s| s.iter().map(|&x| rat(x, 2)).collect())
        .collect()
}

fn standard_roots(label: CartanLabel) -> (usize, Vec<Vector>) {
    let l = label.rank();
    match label.kind() {
        RootType::A => {
            let d = l + 1;
            let mut out = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        let mut v = vec![0; d];
                        v[i] = 1;
                        v[j] = -1;
                        out.push(to_vector(&v));
                    }
                }
            }
            (d, out)
        }
        RootType::B | RootType::C => {
            let factor = if label.kind() == RootType::B { 1 } else { 2 };
            let mut out: Vec<Vector> = signed_pairs(l, l).iter().map(|v| to_vector(v)).collect();
            for i in 0..l {
                let e = unit(l, i);
                out.push(e.iter().map(|&x| int(factor * x)).collect());
                out.push(e.iter().map(|&x| int(-factor * x)).collect());
            }
            (l, out)
        }
        RootType::D => (l, signed_pairs(l, l).iter().map(|v| to_vector(v)).collect()),
        RootType::G => {
            let mut out = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut short = vec![0; 3];
                        short[i] = 1;
                        short[j] = -1;
                        out.push(to_vector(&short));
                    }
                }
                let long: Vec<i64> = (0..3).map(|k| if k == i { 2 } else { -1 }).collect();
                out.push(to_vector(&long));
                out.push(to_vector(&long.iter().map(|x| -x).collect::<Vec<_>>()));
            }
            (3, out)
        }
        RootType::F => {
            let mut out: Vec<Vector> = signed_pairs(4, 4).iter().map(|v| to_vector(v)).collect();
            for i in 0..4 {
                let e = unit(4, i);
                out.push(to_vector(&e));
                out.push(to_vector(&e.iter().map(|x| -x).collect::<Vec<_>>()));
            }
            out.extend(half_spinors(4, |_| true));
            (4, out)
        }
        RootType::E => {
            let mut e8: Vec<Vector> = signed_pairs(8, 8).iter().map(|v| to_vector(v)).collect();
            e8.extend(half_spinors(8, |s| s.iter().filter(|&&x| x < 0).count() % 2 == 0));
            let keep: Box<dyn Fn(&Vector) -> bool> = match l {
                8 => Box::new(|_| true),
                7 => Box::new(|v| v[6] == -v[7].clone()),
                _ => Box::new(|v| v[5] == v[6] && v[6] == -v[7].clone()),
            };
            (8, e8.into_iter().filter(|v| keep(v)).collect())
        }
    }
}

/// `(M^{d-1}, ..., M, 1)`: on roots whose coordinates are bounded by 2 and
/// lie in `(1/2) Z`, its sign is the sign of the first nonzero coordinate.
fn lexicographic_functional(d: usize) -> Vector {
    let m = int(10);
    (0..d).map(|i| num_traits::pow::pow(m.clone(), d - 1 - i)).collect()
}

impl RootSystem {
    /// Validates an explicit root table against `label` and fixes the
    /// positive system.
    pub fn from_roots(label: CartanLabel, ambient_dim: usize, roots: Vec<Vector>) -> Result<RootSystem> {
        let lattice = integer_lattice(&roots)?;
        validate(label, ambient_dim, &roots, &lattice)?;
        let g = lexicographic_functional(ambient_dim);
        let pairings: Vec<Rational> = roots.iter().map(|r| dot(&g, r)).collect();
        if let Some(i) = pairings.iter().position(Zero::is_zero) {
            return Err(Error::InvalidRootTable(format!(
                "ordering functional vanishes on root {}",
                format_vector(&roots[i])
            )));
        }
        let highest = (0..roots.len())
            .max_by(|&a, &b| pairings[a].cmp(&pairings[b]))
            .expect("nonempty");
        let wolf = &roots[highest];
        let ww = dot(wolf, wolf);
        let shift = dot(&g, wolf) / &ww;
        let v0: Vector = g.iter().zip(wolf).map(|(gi, wi)| gi - &shift * wi).collect();
        let spread = roots.iter().map(|r| dot(&v0, r).abs()).max().expect("nonempty");
        let eps = &ww / (int(2) * (Rational::one() + spread));
        let functional: Vector = wolf.iter().zip(&v0).map(|(w, v)| w + &eps * v).collect();

        let positive: Vec<usize> = (0..roots.len())
            .filter(|&i| dot(&functional, &roots[i]).is_positive())
            .collect();
        if positive.len() * 2 != roots.len() {
            return Err(Error::InvalidRootTable("adapted functional is not generic".into()));
        }
        let positive_set: HashSet<&[i64]> = positive.iter().map(|&i| lattice[i].as_slice()).collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&i| {
                !positive.iter().any(|&j| {
                    let rest: Vec<i64> = lattice[i].iter().zip(&lattice[j]).map(|(a, b)| a - b).collect();
                    positive_set.contains(rest.as_slice())
                })
            })
            .collect();
        if simple.len() != label.rank() {
            return Err(Error::InvalidRootTable(format!(
                "found {} simple roots, expected {}",
                simple.len(),
                label.rank()
            )));
        }
        Ok(RootSystem {
            label,
            ambient_dim,
            roots,
            positive,
            simple,
            functional,
            highest,
        })
    }

    pub fn label(&self) -> CartanLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Vector> {
        self.positive.iter().map(|&i| &self.roots[i])
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Vector> {
        self.simple.iter().map(|&i| &self.roots[i])
    }

    /// The functional whose positive side is the positive system.
    pub fn functional(&self) -> &Vector {
        &self.functional
    }

    pub fn highest_root(&self) -> &Vector {
        &self.roots[self.highest]
    }

    pub fn is_positive(&self, root: &[Rational]) -> bool {
        dot(&self.functional, root).is_positive()
    }

    /// `dim g = |roots| + rank`.
    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank()
    }
}

/// Roots scaled by the common denominator of their coordinates.
fn integer_lattice(roots: &[Vector]) -> Result<Vec<Vec<i64>>> {
    let denom = roots.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let bound = BigInt::from(1i64 << 31);
    roots
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let scaled = x.numer() * (&denom / x.denom());
                    if scaled.abs() < bound {
                        Ok(i64::try_from(scaled).expect("bounded"))
                    } else {
                        Err(Error::InvalidRootTable(format!(
                            "coordinates of {} are too large",
                            format_vector(r)
                        )))
                    }
                })
                .collect()
        })
        .collect()
}

fn validate(label: CartanLabel, ambient_dim: usize, roots: &[Vector], lattice: &[Vec<i64>]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidRootTable(msg));
    if roots.len() != label.root_count() {
        return bad(format!(
            "{label} has {} roots, table has {}",
            label.root_count(),
            roots.len()
        ));
    }
    if let Some(r) = roots.iter().find(|r| r.len() != ambient_dim) {
        return bad(format!(
            "root {} does not have {ambient_dim} coordinates",
            format_vector(r)
        ));
    }
    if let Some(r) = roots.iter().find(|r| r.iter().all(Zero::is_zero)) {
        return bad(format!("zero vector {} in root table", format_vector(r)));
    }
    let lengths: Vec<Rational> = roots.iter().map(|r| dot(r, r)).collect();
    let longest = lengths.iter().max().expect("nonempty");
    let short = lengths.iter().filter(|x| *x != longest).count();
    if short != label.short_root_count() {
        return bad(format!("{short} short roots, {label} has {}", label.short_root_count()));
    }
    let set: HashSet<&[i64]> = lattice.iter().map(Vec::as_slice).collect();
    if set.len() != roots.len() {
        return bad("duplicate roots".into());
    }
    for (r, v) in roots.iter().zip(lattice) {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        if !set.contains(neg.as_slice()) {
            return bad(format!("negative of {} missing", format_vector(r)));
        }
    }
    let idot = |a: &[i64], b: &[i64]| -> i128 { a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum() };
    for (ra, a) in roots.iter().zip(lattice) {
        let aa = idot(a, a);
        for (rb, b) in roots.iter().zip(lattice) {
            let twice = 2 * idot(a, b);
            if twice % aa != 0 {
                return bad(format!(
                    "Cartan number of {} against {} is {}",
                    format_vector(rb),
                    format_vector(ra),
                    Rational::new(twice.into(), aa.into())
                ));
            }
            let cartan = twice / aa;
            let reflected: Option<Vec<i64>> = b
                .iter()
                .zip(a)
                .map(|(x, y)| i64::try_from(*x as i128 - cartan * *y as i128).ok())
                .collect();
            if !reflected.is_some_and(|v| set.contains(v.as_slice())) {
                return bad(format!(
                    "reflection of {} in {} leaves the table",
                    format_vector(rb),
                    format_vector(ra)
                ));
            }
        }
    }
    let span = LinearMap::from_rows(ambient_dim, roots.iter().map(|r| SparseVec::from_dense(r)).collect());
    if span.rank() != label.rank() {
        return bad(format!("roots span rank {}, expected {}", span.rank(), label.rank()));
    }
    Ok(())
}
