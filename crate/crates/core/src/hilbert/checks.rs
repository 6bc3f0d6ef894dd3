use num_traits::{One, Zero};
use serde::Serialize;

use super::expansion::{binomial_basis_coeffs, reconstruct};
use super::{is_symplectic, pow4, projective_bound, quaternionic_volume, HilbertReport};
use crate::exact::{format_rational, int, rat, Poly, Rational};

/// Scan range used by [`super::hilbert_poly`].
pub const DEFAULT_R_MAX: i64 = 20;

/// One named identity or bound, with the first counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, failure: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        }
    }
}

fn first_failure<I, F>(range: I, bad: F) -> Option<String>
where
    I: IntoIterator<Item = i64>,
    F: FnMut(i64) -> Option<String>,
{
    range.into_iter().find_map(bad)
}

/// `ok` must hold, and `equal` must hold exactly in the symplectic class.
fn bound_with_equality(symplectic: bool, ok: bool, equal: bool, values: String) -> Option<String> {
    if !ok {
        Some(format!("bound violated: {values}"))
    } else if equal != symplectic {
        Some(format!(
            "equality {} outside the projective case: {values}",
            if equal { "holds" } else { "fails" }
        ))
    } else {
        None
    }
}

/// Every identity and bound the polynomial of a Wolf space must satisfy.
/// Failures are returned as data.
pub fn verify_report(rep: &HilbertReport, r_max: i64) -> Vec<Check> {
    let p = &rep.poly;
    let n = rep.n;
    let symplectic = is_symplectic(rep.label);
    let bound = projective_bound(n);
    let show = |q: &Rational| format_rational(q);
    let mut out = Vec::new();

    let top = 2 * n + 1;
    out.push(Check::new(
        "degree",
        (p.degree() != Some(top)).then(|| format!("degree {:?}, expected {top}", p.degree())),
    ));

    let p0 = p.eval_int(0);
    out.push(Check::new(
        "constant_term",
        (!p0.is_one()).then(|| format!("P(0) = {}", show(&p0))),
    ));

    let p1 = p.eval_int(1);
    out.push(Check::new(
        "isometry_dimension",
        (p1 != int(rep.algebra_dim as i64)).then(|| format!("P(1) = {}, dim g = {}", show(&p1), rep.algebra_dim)),
    ));

    let mirrored = p.compose(&Poly::linear(int(-1), int(-(n as i64) - 1)));
    let residual = p + &mirrored;
    out.push(Check::new(
        "symmetry",
        (!residual.is_zero()).then(|| format!("P(r) + P(-r-n-1) = {}", residual.display_in("r"))),
    ));

    out.push(Check::new(
        "integrality",
        first_failure(-r_max..=r_max, |r| {
            let v = p.eval_int(r);
            (!v.is_integer()).then(|| format!("P({r}) = {}", show(&v)))
        }),
    ));

    out.push(Check::new(
        "main_bound",
        first_failure(0..=r_max, |r| {
            let (v, b) = (p.eval_int(r), bound.eval_int(r));
            (v < Rational::zero() || v > b).then(|| format!("P({r}) = {}, bound {}", show(&v), show(&b)))
        }),
    ));

    let same = *p == bound;
    out.push(Check::new(
        "main_bound_equality",
        (same != symplectic).then(|| {
            format!(
                "P {} the projective polynomial for {}",
                if same { "equals" } else { "differs from" },
                rep.label
            )
        }),
    ));

    let cap = pow4(n);
    out.push(Check::new(
        "volume_bound",
        bound_with_equality(
            symplectic,
            rep.volume <= cap,
            rep.volume == cap,
            format!("v = {}, 4^n = {}", show(&rep.volume), show(&cap)),
        ),
    ));

    let iso = int(((n + 1) * (2 * n + 3)) as i64);
    out.push(Check::new(
        "isometry_bound",
        bound_with_equality(
            symplectic,
            p1 <= iso,
            p1 == iso,
            format!("P(1) = {}, (n+1)(2n+3) = {}", show(&p1), show(&iso)),
        ),
    ));

    // c_1(Z)^{2n+1} = (n+1)^{2n+1} deg Z against the value on the twistor space of HP^n
    let c1_power = Rational::from_integer(num_bigint::BigInt::from(n + 1).pow(top as u32));
    let degree_value = &c1_power * &rep.twistor_degree;
    let degree_cap = &c1_power * Rational::from_integer(num_bigint::BigInt::from(2).pow(top as u32));
    out.push(Check::new(
        "degree_bound",
        bound_with_equality(
            symplectic,
            degree_value <= degree_cap,
            degree_value == degree_cap,
            format!("c1^(2n+1) = {}, bound {}", show(&degree_value), show(&degree_cap)),
        ),
    ));

    let volume_check = match quaternionic_volume(p, n) {
        Ok(v) if v == rep.volume && rep.twistor_degree == &v * int(2) && v.is_integer() => None,
        Ok(v) => Some(format!(
            "v = {}, report has v = {}, deg Z = {}",
            show(&v),
            show(&rep.volume),
            show(&rep.twistor_degree)
        )),
        Err(e) => Some(e.to_string()),
    };
    out.push(Check::new("volume", volume_check));

    let rebuilt = reconstruct(&rep.char_coeffs);
    let expansion = if rebuilt != *p {
        Some(format!("reconstruction gives {}", rebuilt.display_in("r")))
    } else if rep.char_coeffs.last() != Some(&rep.volume) {
        Some(format!(
            "c_n = {}, v = {}",
            rep.char_coeffs.last().map(show).unwrap_or_default(),
            show(&rep.volume)
        ))
    } else {
        None
    };
    out.push(Check::new("bernoulli_round_trip", expansion));

    let coeffs = binomial_basis_coeffs(p);
    out.push(Check::new(
        "binomial_integrality",
        coeffs
            .iter()
            .position(|c| !c.is_integer())
            .map(|i| format!("n_{i} = {}", show(&coeffs[i]))),
    ));

    if symplectic {
        out.push(Check::new(
            "projective_zeroes",
            first_failure(1..=n as i64, |j| {
                let v = p.eval(&rat(-j, 2));
                (!v.is_zero()).then(|| format!("P(-{j}/2) = {}", show(&v)))
            }),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_poly;
    use crate::rootsys::build_root_system;

    fn report(label: &str) -> HilbertReport {
        hilbert_poly(&build_root_system(label.parse().unwrap()).unwrap()).unwrap()
    }

    fn failing(checks: &[Check]) -> Vec<String> {
        checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }

    #[test]
    fn g2_passes_with_wide_scan() {
        let rep = report("G2");
        let checks = verify_report(&rep, 50);
        assert!(failing(&checks).is_empty());
        assert!(!checks.iter().any(|c| c.name == "projective_zeroes"));
    }

    #[test]
    fn projective_case_has_the_extra_zeroes() {
        let rep = report("C3");
        assert_eq!(rep.value(-1), int(0));
        assert_eq!(rep.poly.eval(&rat(-1, 2)), int(0));
        let checks = verify_report(&rep, 10);
        assert!(checks.iter().any(|c| c.name == "projective_zeroes" && c.passed));
    }

    #[test]
    fn tampering_is_reported_by_name() {
        let mut rep = report("A3");
        rep.poly = &rep.poly + &Poly::constant(rat(1, 2));
        let names = failing(&verify_report(&rep, 5));
        for expected in [
            "constant_term",
            "isometry_dimension",
            "symmetry",
            "integrality",
            "main_bound",
            "bernoulli_round_trip",
        ] {
            assert!(names.iter().any(|n| n == expected), "{expected} missing from {names:?}");
        }

        let mut rep = report("A3");
        rep.algebra_dim += 1;
        assert_eq!(failing(&verify_report(&rep, 5)), vec!["isometry_dimension"]);

        // a non-projective algebra claiming the projective polynomial
        let mut rep = report("A3");
        let hp = report("C3");
        rep.poly = hp.poly.clone();
        rep.volume = hp.volume.clone();
        rep.twistor_degree = hp.twistor_degree.clone();
        rep.char_coeffs = hp.char_coeffs.clone();
        rep.algebra_dim = hp.algebra_dim;
        let names = failing(&verify_report(&rep, 5));
        assert_eq!(
            names,
            vec!["main_bound_equality", "volume_bound", "isometry_bound", "degree_bound"]
        );
    }

    #[test]
    fn failure_details_name_the_counterexample() {
        let mut rep = report("G2");
        rep.poly = &rep.poly + &Poly::monomial(int(1), 3);
        let checks = verify_report(&rep, 20);
        let bound = checks.iter().find(|c| c.name == "main_bound").unwrap();
        assert!(bound.passed);
        let sym = checks.iter().find(|c| c.name == "symmetry").unwrap();
        assert!(!sym.passed);
        assert!(sym.detail.as_ref().unwrap().contains("r"));
    }
}
