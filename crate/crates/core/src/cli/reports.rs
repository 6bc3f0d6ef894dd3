use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::render::{check_lines, columns, csv_text, key_values};
use super::CliError;
use crate::error::Error;
use crate::exact::{format_rational, int, parse_rational, rat, Poly, Rational};
use crate::hilbert::{
    bernoulli_basis, bernoulli_expand, binomial_basis_coeffs, chern_character_coeff, closed_form, hilbert_poly,
    lambda_min, phi, power_sum, projective_bound, quaternionic_volume, reconstruct, Check, Family, HilbertReport,
    SpectralParams,
};
use crate::prolong::{
    divergence_symbol, flat_model_report, lemma_report, polynomial_solution_space, prolongation_tower, twistor_symbol,
    FlatModelReport, ProlongationLemmaReport, Termination, TwistorSymbolSpec,
};
use crate::rootsys::{build_root_system, casimir, CartanLabel, Normalization, RootSystem, Vector};

/// Version of the JSON layout described in `docs/report.schema.json`.
pub const SCHEMA_VERSION: u32 = 1;

/// Twistor grid run by `verify --scope prolong`.
pub const PROLONG_GRID: [(usize, usize); 5] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)];

/// Largest rank covered by `verify --scope hilbert`.
pub const VERIFY_MAX_RANK: usize = 8;

/// Output of one command: a JSON body plus its table and CSV renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub body: Value,
    pub checks: Vec<Check>,
    table: String,
    csv_rows: Vec<Vec<String>>,
}

impl Report {
    fn new(
        command: &'static str,
        mut body: Value,
        checks: Vec<Check>,
        table: String,
        csv_rows: Vec<Vec<String>>,
    ) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        if let Value::Object(map) = &mut body {
            map.insert(
                "checks".into(),
                serde_json::to_value(&checks).expect("checks serialize"),
            );
            map.insert("passed".into(), Value::Bool(passed));
        }
        Report {
            command,
            body,
            checks,
            table,
            csv_rows,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn envelope(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "tool": { "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") },
            "command": self.command,
            "passed": self.passed(),
            "report": self.body,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.envelope()).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn table(&self) -> String {
        let mut s = self.table.clone();
        s.push_str(&check_lines(&self.checks));
        s
    }

    pub fn csv(&self) -> String {
        csv_text(&self.csv_rows)
    }
}

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn qs(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(q).collect()
}

fn check(name: impl Into<String>, failure: Option<String>) -> Check {
    Check {
        name: name.into(),
        passed: failure.is_none(),
        detail: failure,
    }
}

fn prefixed(prefix: &str, checks: Vec<Check>) -> impl Iterator<Item = Check> + '_ {
    checks.into_iter().map(move |mut c| {
        c.name = format!("{prefix}/{}", c.name);
        c
    })
}

/// An algebra, either directly or as a member of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Algebra(CartanLabel),
    Family(Family, usize),
}

impl Selector {
    pub fn label(&self) -> Result<CartanLabel, Error> {
        match self {
            Selector::Algebra(l) => Ok(*l),
            Selector::Family(f, n) => f.algebra(*n),
        }
    }
}

/// A root table read from disk; validated only when the system is built.
#[derive(Clone, Debug)]
pub struct RootTable {
    pub label: CartanLabel,
    pub ambient_dim: usize,
    pub roots: Vec<Vector>,
}

impl RootTable {
    pub fn system(&self) -> Result<RootSystem, Error> {
        RootSystem::from_roots(self.label, self.ambient_dim, self.roots.clone())
    }
}

#[derive(Deserialize)]
struct RootTableFile {
    label: String,
    ambient_dim: usize,
    roots: Vec<Vec<String>>,
}

pub fn load_root_table(path: &Path) -> Result<RootTable, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read root table {}: {e}", path.display())))?;
    let file: RootTableFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed root table {}: {e}", path.display())))?;
    let roots = file
        .roots
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vector, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RootTable {
        label: file.label.parse()?,
        ambient_dim: file.ambient_dim,
        roots,
    })
}

fn system_for(label: CartanLabel, table: Option<&RootTable>) -> Result<RootSystem, Error> {
    match table {
        Some(t) if t.label == label => t.system(),
        _ => build_root_system(label),
    }
}

#[derive(Serialize)]
struct WolfJson {
    algebra: String,
    rank: usize,
    family: Option<String>,
    n: usize,
    dim_g: usize,
    degenerate: bool,
    warning: Option<String>,
    coefficients: Vec<String>,
    polynomial: String,
    #[serde(rename = "P0")]
    p0: String,
    #[serde(rename = "P1")]
    p1: String,
    values: Vec<String>,
    volume: String,
    twistor_degree: String,
    char_coeffs: Vec<String>,
    binomial_coeffs: Vec<String>,
}

/// `wolf`: the Hilbert polynomial of one Wolf space with all checks.
pub fn wolf_report(selector: &Selector, r_max: i64, table: Option<&RootTable>) -> Result<Report, CliError> {
    let label = selector.label()?;
    if let Some(t) = table {
        if t.label != label {
            return Err(CliError::Usage(format!("root table is for {}, not {label}", t.label)));
        }
    }
    let rep = hilbert_poly(&system_for(label, table)?)?.with_checks(r_max);
    let mut checks = rep.checks.clone();
    let family = match selector {
        Selector::Family(f, n) => {
            checks.extend(family_checks(*f, *n, &rep)?);
            Some(f.to_string())
        }
        Selector::Algebra(_) => None,
    };
    let values: Vec<Rational> = (0..=r_max).map(|r| rep.value(r)).collect();
    let warning = rep
        .degenerate
        .then(|| format!("{label} has no roots of level one half: quaternionic dimension 0, P(r) = 2r + 1"));
    let body = WolfJson {
        algebra: label.to_string(),
        rank: label.rank(),
        family: family.clone(),
        n: rep.n,
        dim_g: rep.algebra_dim,
        degenerate: rep.degenerate,
        warning: warning.clone(),
        coefficients: qs(rep.poly.coeffs()),
        polynomial: rep.poly.display_in("r"),
        p0: q(&rep.value(0)),
        p1: q(&rep.value(1)),
        values: qs(&values),
        volume: q(&rep.volume),
        twistor_degree: q(&rep.twistor_degree),
        char_coeffs: qs(&rep.char_coeffs),
        binomial_coeffs: qs(&binomial_basis_coeffs(&rep.poly)),
    };

    let mut head = vec![
        ("algebra", label.to_string()),
        ("n", rep.n.to_string()),
        ("dim g", rep.algebra_dim.to_string()),
        ("P(r)", rep.poly.display_in("r")),
        ("volume", q(&rep.volume)),
        ("deg Z", q(&rep.twistor_degree)),
        ("Bernoulli coefficients", qs(&rep.char_coeffs).join(", ")),
    ];
    if let Some(f) = &family {
        head.insert(1, ("family", f.clone()));
    }
    if let Some(w) = &warning {
        head.push(("warning", w.clone()));
    }
    let bound = projective_bound(rep.n);
    let mut rows = vec![vec!["r".to_string(), "P(r)".to_string(), "HP^n bound".to_string()]];
    for (r, v) in values.iter().enumerate() {
        rows.push(vec![r.to_string(), q(v), q(&bound.eval_int(r as i64))]);
    }
    let table = format!("{}\n{}", key_values(&head), columns(&rows, &[true, true, true]));
    Ok(Report::new(
        "wolf",
        serde_json::to_value(body).expect("serialize"),
        checks,
        table,
        rows,
    ))
}

fn family_checks(family: Family, n: usize, rep: &HilbertReport) -> Result<Vec<Check>, Error> {
    let formula = closed_form(family, n)?;
    let volume = family.volume(n)?;
    Ok(vec![
        check(
            "closed_form",
            (formula != rep.poly).then(|| format!("closed form {}", formula.display_in("r"))),
        ),
        check(
            "family_volume",
            (volume != rep.volume).then(|| format!("stated volume {}, computed {}", q(&volume), q(&rep.volume))),
        ),
    ])
}

fn termination_json(t: Termination) -> Value {
    match t {
        Termination::Terminated { degree } => json!({ "terminated": true, "degree": degree, "cap": null }),
        Termination::NotTerminated { cap } => json!({ "terminated": false, "degree": null, "cap": cap }),
    }
}

fn lemma_json(rep: &ProlongationLemmaReport) -> Value {
    json!({
        "levels": rep.levels.iter().map(|c| json!({
            "level": c.level, "computed": c.computed, "expected": c.expected,
        })).collect::<Vec<_>>(),
        "termination": termination_json(rep.termination),
        "equation_kernel_dim": rep.equation_kernel_dim,
        "total_dim": rep.total_dim,
        "expected_total_dim": rep.expected_total_dim,
        "spencer": rep.spencer.iter().map(|s| json!({
            "level": s.level,
            "kernel_dim": s.kernel_dim,
            "next_level_dim": s.next_level_dim,
            "image_contained": s.image_contained,
            "exact": s.exact(),
        })).collect::<Vec<_>>(),
    })
}

fn flat_json(rep: &FlatModelReport) -> Value {
    json!({
        "i_map_ranks": rep.i_map_ranks.iter().map(|(rank, dim)| json!({ "rank": rank, "dim": dim })).collect::<Vec<_>>(),
        "generalized_inverse": rep.generalized_inverse,
        "unitriangular": rep.unitriangular,
        "solution_dims": rep.solution_dims.iter().map(|(d, s)| json!({ "degree_bound": d, "dim": s })).collect::<Vec<_>>(),
        "jets_in_image": rep.jets_in_image,
        "stationary": rep.stationary(),
        "equality_observed": rep.equality_observed(),
    })
}

fn lemma_checks(rep: &ProlongationLemmaReport) -> Vec<Check> {
    let dims = |f: fn(&crate::prolong::LevelCheck) -> usize| rep.levels.iter().map(f).collect::<Vec<_>>();
    let termination = match rep.termination {
        Termination::Terminated { degree } => format!("terminated at degree {degree}"),
        Termination::NotTerminated { cap } => format!("not terminated by level {cap}"),
    };
    vec![
        check(
            "level_dims",
            (!rep.levels_pass()).then(|| {
                if rep.levels.len() != 2 * rep.r + 1 {
                    format!(
                        "levels 0..={} computed, the formula covers 0..={}",
                        rep.levels.len() - 1,
                        2 * rep.r
                    )
                } else {
                    format!(
                        "computed {:?}, expected {:?}",
                        dims(|c| c.computed),
                        dims(|c| c.expected)
                    )
                }
            }),
        ),
        check(
            "termination",
            (!rep.termination_pass()).then(|| format!("{termination}, expected degree {}", 2 * rep.r - 1)),
        ),
        check(
            "total_dim",
            (!rep.total_pass()).then(|| match rep.total_dim {
                Some(t) => format!("total {t}, expected {}", rep.expected_total_dim),
                None => format!("tower did not terminate, expected total {}", rep.expected_total_dim),
            }),
        ),
        check(
            "spencer_exactness",
            (!rep.spencer_pass()).then(|| {
                let bad: Vec<usize> = rep.spencer.iter().filter(|s| !s.exact()).map(|s| s.level).collect();
                format!("not exact at levels {bad:?} of {} checked", rep.spencer.len())
            }),
        ),
    ]
}

fn flat_checks(rep: &FlatModelReport) -> Vec<Check> {
    vec![
        check(
            "i_maps_injective",
            rep.i_map_ranks.iter().position(|(a, b)| a != b).map(|l| {
                format!(
                    "rank of I^(<={l}) is {}, expected {}",
                    rep.i_map_ranks[l].0, rep.i_map_ranks[l].1
                )
            }),
        ),
        check(
            "partial_inverse",
            (!rep.generalized_inverse).then(|| "P S P != P".to_string()),
        ),
        check(
            "unitriangular",
            (!rep.unitriangular).then(|| "blocks are not unitriangular".to_string()),
        ),
        check(
            "jets_in_image",
            (!rep.jets_in_image).then(|| "a solution jet is not in the image".to_string()),
        ),
        check(
            "solutions_stationary",
            (!rep.stationary()).then(|| format!("solution dims {:?}", rep.solution_dims)),
        ),
        check(
            "solutions_bounded",
            (!rep.bound_holds()).then(|| format!("solution dims {:?} exceed {}", rep.solution_dims, rep.total_dim)),
        ),
    ]
}

/// `prolong`: the tower of the twistor symbol for `(n, r)`.
pub fn prolong_report(n: usize, r: usize, cap: Option<usize>, degree_bound: Option<usize>) -> Result<Report, CliError> {
    let sym = twistor_symbol(&TwistorSymbolSpec::new(n, r)?);
    let cap = cap.unwrap_or(2 * r);
    let tower = prolongation_tower(&sym, cap)?;
    let lemma = lemma_report(&tower, n, r)?;
    let flat = match tower.termination() {
        Termination::Terminated { .. } => Some(flat_model_report(&tower, n, r)?),
        Termination::NotTerminated { .. } => None,
    };
    let mut checks = lemma_checks(&lemma);
    if let Some(f) = &flat {
        checks.extend(flat_checks(f));
    }
    let solutions = degree_bound.map(|d| (d, polynomial_solution_space(&sym, d).dim()));
    if let (Some((d, dim)), Some(total)) = (solutions, tower.total_dim()) {
        checks.push(check(
            "solution_bound",
            (dim > total).then(|| format!("{dim} solutions of degree <= {d} exceed {total}")),
        ));
    }

    let mut body = lemma_json(&lemma);
    let map = body.as_object_mut().expect("object");
    map.insert("n".into(), json!(n));
    map.insert("r".into(), json!(r));
    map.insert("cap".into(), json!(cap));
    map.insert("flat_model".into(), flat.as_ref().map_or(Value::Null, flat_json));
    map.insert(
        "solutions".into(),
        solutions.map_or(Value::Null, |(d, dim)| json!({ "degree_bound": d, "dim": dim })),
    );

    let termination = match lemma.termination {
        Termination::Terminated { degree } => degree.to_string(),
        Termination::NotTerminated { cap } => format!("not terminated (cap {cap})"),
    };
    let mut head = vec![
        ("n, r", format!("{n}, {r}")),
        ("equation kernel", lemma.equation_kernel_dim.to_string()),
        ("termination degree", termination),
        (
            "total",
            format!(
                "{} (expected {})",
                lemma.total_dim.map_or("-".to_string(), |t| t.to_string()),
                lemma.expected_total_dim
            ),
        ),
    ];
    if let Some(f) = &flat {
        let dims: Vec<String> = f
            .solution_dims
            .iter()
            .map(|(d, s)| format!("{s} at degree {d}"))
            .collect();
        head.push(("polynomial solutions", dims.join(", ")));
    }
    if let Some((d, dim)) = solutions {
        head.push(("solutions requested", format!("{dim} at degree {d}")));
    }
    let mut rows = vec![["level", "dim", "formula", "spencer kernel", "spencer exact"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for c in &lemma.levels {
        let spencer = lemma.spencer.iter().find(|s| s.level == c.level);
        rows.push(vec![
            c.level.to_string(),
            c.computed.to_string(),
            c.expected.to_string(),
            spencer.map_or("-".into(), |s| s.kernel_dim.to_string()),
            spencer.map_or("-".into(), |s| s.exact().to_string()),
        ]);
    }
    let table = format!(
        "{}\n{}",
        key_values(&head),
        columns(&rows, &[true, true, true, true, false])
    );
    Ok(Report::new("prolong", body, checks, table, rows))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    All,
    Hilbert,
    Prolong,
}

impl Scope {
    fn name(&self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Hilbert => "hilbert",
            Scope::Prolong => "prolong",
        }
    }
}

fn hilbert_suite(r_max: i64, table: Option<&RootTable>) -> Vec<Check> {
    let mut out = Vec::new();
    let mut reports: BTreeMap<CartanLabel, HilbertReport> = BTreeMap::new();
    for label in CartanLabel::all_up_to_rank(VERIFY_MAX_RANK) {
        let prefix = format!("hilbert/{label}");
        let rs = match system_for(label, table) {
            Ok(rs) => rs,
            Err(e) => {
                out.push(check(format!("{prefix}/root_system"), Some(e.to_string())));
                continue;
            }
        };
        match hilbert_poly(&rs) {
            Ok(rep) => {
                let rep = rep.with_checks(r_max);
                out.extend(prefixed(&prefix, rep.checks.clone()));
                out.extend(spectral_checks(&prefix, &rs, rep.n));
                reports.insert(label, rep);
            }
            Err(e) => out.push(check(format!("{prefix}/weyl_cross_check"), Some(e.to_string()))),
        }
    }

    for family in Family::ALL {
        let ns: Vec<usize> = if family == Family::G2 {
            vec![2]
        } else {
            (1..=6).collect()
        };
        for n in ns {
            let prefix = format!("family/{family}/n={n}");
            let found = family.algebra(n).ok().and_then(|l| reports.get(&l));
            match found {
                Some(rep) => match family_checks(family, n, rep) {
                    Ok(cs) => out.extend(prefixed(&prefix, cs)),
                    Err(e) => out.push(check(format!("{prefix}/closed_form"), Some(e.to_string()))),
                },
                None => out.push(check(
                    format!("{prefix}/closed_form"),
                    Some("no report for the algebra".into()),
                )),
            }
        }
    }

    let poly_of = |s: &str| {
        s.parse::<CartanLabel>()
            .ok()
            .and_then(|l| reports.get(&l))
            .map(|r| r.poly.clone())
    };
    for (a, b) in [("B2", "C2"), ("D3", "A3")] {
        let same = matches!((poly_of(a), poly_of(b)), (Some(x), Some(y)) if x == y);
        out.push(check(
            format!("isogeny/{a}={b}"),
            (!same).then(|| "polynomials differ".to_string()),
        ));
    }
    let same = closed_form(Family::Gr4R, 1).ok() == closed_form(Family::HPn, 1).ok();
    out.push(check(
        "isogeny/Gr4R(1)=HPn(1)",
        (!same).then(|| "closed forms differ".to_string()),
    ));

    let mismatch = (0..=10usize)
        .flat_map(|k| (0..=6usize).map(move |l| (k, l)))
        .find(|&(k, l)| chern_character_coeff(k, l) != power_sum(k, l))
        .map(|(k, l)| format!("k={k}, l={l}"));
    out.push(check("chern/power_sums", mismatch));

    let hp1 = closed_form(Family::HPn, 1).and_then(|p| bernoulli_expand(&p, 1));
    out.push(check(
        "bernoulli/HP1",
        (hp1.as_ref().ok() != Some(&vec![int(0), int(4)])).then(|| format!("{hp1:?}")),
    ));

    let mut grid_failure = None;
    'grid: for n in 1..=6usize {
        for r in 0..=6usize {
            for kappa in [int(1), rat(2, 3), rat(17, 5), int(2 * n as i64)] {
                let sp = SpectralParams::new(n, kappa.clone(), r).expect("valid");
                if phi(&sp, (n + 2 * r) as i64, 0) != lambda_min(&sp) {
                    grid_failure = Some(format!("n={n}, r={r}, kappa={}", q(&kappa)));
                    break 'grid;
                }
            }
        }
    }
    out.push(check("spectral/phi_top_weight", grid_failure));
    out
}

fn spectral_checks(prefix: &str, rs: &RootSystem, n: usize) -> Vec<Check> {
    if n == 0 {
        return Vec::new();
    }
    let bad = (0..=4usize).find(|&r| {
        let weight: Vector = rs.highest_root().iter().map(|x| x * int(r as i64)).collect();
        let sp = SpectralParams::killing(n, r).expect("n >= 1");
        lambda_min(&sp) != casimir(&weight, rs, Normalization::Killing)
    });
    vec![check(
        format!("{prefix}/killing_casimir"),
        bad.map(|r| format!("lambda_min differs from the Casimir at r = {r}")),
    )]
}

fn prolong_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for (n, r) in PROLONG_GRID {
        let prefix = format!("prolong/n={n},r={r}");
        let result = (|| -> Result<Vec<Check>, Error> {
            let tower = prolongation_tower(&twistor_symbol(&TwistorSymbolSpec::new(n, r)?), 2 * r)?;
            let mut cs = lemma_checks(&lemma_report(&tower, n, r)?);
            cs.extend(flat_checks(&flat_model_report(&tower, n, r)?));
            Ok(cs)
        })();
        match result {
            Ok(cs) => out.extend(prefixed(&prefix, cs)),
            Err(e) => out.push(check(format!("{prefix}/tower"), Some(e.to_string()))),
        }
    }
    let control = divergence_symbol(2).and_then(|s| prolongation_tower(&s, 5));
    out.push(check(
        "prolong/divergence/not_terminated",
        match control {
            Ok(t) if t.termination() == (Termination::NotTerminated { cap: 5 }) => None,
            Ok(t) => Some(format!("{:?}", t.termination())),
            Err(e) => Some(e.to_string()),
        },
    ));
    out
}

/// `verify`: the full check grid for the chosen scope. Never fails as a
/// command; problems become failing checks.
pub fn verify_suite(scope: Scope, r_max: i64, table: Option<&RootTable>) -> Report {
    let mut checks = Vec::new();
    if matches!(scope, Scope::All | Scope::Hilbert) {
        checks.extend(hilbert_suite(r_max, table));
    }
    if matches!(scope, Scope::All | Scope::Prolong) {
        checks.extend(prolong_suite());
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let failed = checks.iter().filter(|c| !c.passed).count();
    let body = json!({
        "scope": scope.name(),
        "r_max": r_max,
        "total": checks.len(),
        "failed": failed,
    });
    let head = vec![
        ("scope", scope.name().to_string()),
        ("checks", checks.len().to_string()),
        ("failed", failed.to_string()),
    ];
    let mut rows = vec![vec!["name".to_string(), "passed".to_string(), "detail".to_string()]];
    for c in &checks {
        rows.push(vec![
            c.name.clone(),
            c.passed.to_string(),
            c.detail.clone().unwrap_or_default(),
        ]);
    }
    Report::new("verify", body, checks, key_values(&head), rows)
}

/// Input of `expand`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpandSource {
    Selected(Selector),
    /// Coefficients in increasing degree, with the quaternionic dimension.
    Coefficients(Vec<Rational>, usize),
}

pub fn parse_coefficients(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).map_err(CliError::from))
        .collect()
}

/// `expand`: coefficients of a polynomial in the Bernoulli basis.
pub fn expand_report(source: &ExpandSource) -> Result<Report, CliError> {
    let (name, poly, n) = match source {
        ExpandSource::Selected(Selector::Algebra(label)) => {
            let rep = hilbert_poly(&build_root_system(*label)?)?;
            (label.to_string(), rep.poly, rep.n)
        }
        ExpandSource::Selected(Selector::Family(f, n)) => (format!("{f}(n={n})"), closed_form(*f, *n)?, *n),
        ExpandSource::Coefficients(c, n) => ("polynomial".to_string(), Poly::from_coeffs(c.clone()), *n),
    };
    let mut checks = Vec::new();
    let expansion = bernoulli_expand(&poly, n);
    let coeffs = match &expansion {
        Ok(c) => Some(c.clone()),
        Err(e @ (Error::SymmetryViolated { .. } | Error::DegreeMismatch { .. })) => {
            checks.push(check("expansion", Some(e.to_string())));
            None
        }
        Err(e) => return Err(e.clone().into()),
    };
    let volume = quaternionic_volume(&poly, n).ok();
    if let Some(c) = &coeffs {
        let rebuilt = reconstruct(c);
        checks.push(check(
            "round_trip",
            (rebuilt != poly).then(|| format!("reconstruction gives {}", rebuilt.display_in("r"))),
        ));
        if let Some(v) = &volume {
            checks.push(check(
                "top_coefficient_is_volume",
                (c.last() != Some(v)).then(|| format!("c_n = {:?}, v = {}", c.last().map(q), q(v))),
            ));
        }
    }
    let basis: Vec<String> = bernoulli_basis(n).iter().map(|f| f.display_in("r")).collect();
    let body = json!({
        "source": name,
        "n": n,
        "coefficients": qs(poly.coeffs()),
        "polynomial": poly.display_in("r"),
        "basis": basis,
        "char_coeffs": coeffs.as_ref().map(|c| qs(c)),
        "volume": volume.as_ref().map(q),
        "binomial_coeffs": qs(&binomial_basis_coeffs(&poly)),
    });
    let head = vec![
        ("source", name.clone()),
        ("n", n.to_string()),
        ("P(r)", poly.display_in("r")),
        ("volume", volume.as_ref().map_or("-".to_string(), q)),
    ];
    let mut rows = vec![vec!["l".to_string(), "c_l".to_string(), "basis".to_string()]];
    if let Some(c) = &coeffs {
        for (l, (c, f)) in c.iter().zip(&basis).enumerate() {
            rows.push(vec![l.to_string(), q(c), f.clone()]);
        }
    }
    let table = format!("{}\n{}", key_values(&head), columns(&rows, &[true, true, false]));
    Ok(Report::new("expand", body, checks, table, rows))
}
