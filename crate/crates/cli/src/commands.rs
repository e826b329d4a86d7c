//! One adapter per subcommand. Each parses its inputs, calls the engine and
//! formats the result; no mathematics happens here.

use std::path::Path;

use serde_json::{json, Value};
use zinbiel_core::free::{expand as expand_expr, is_tortkara_element, p_map, parse_expr, super_shuffle, Alphabet, Multidegree};
use zinbiel_core::graded::{FreeElement, Rational};
use zinbiel_core::rota_baxter::{binomial_product, derived_product, derived_tower, GradedOperator, RotaBaxterError};
use zinbiel_core::speciality::{cohn_speciality_check, IdealSpec, SpecialityVerdict};
use zinbiel_core::superalgebra::{
    catalog as all_entries, grassmann_envelope, lookup, verify_catalog, verify_identity, CatalogEntry, CatalogOptions,
    IdentityKind, IdentityVerdict, SuperAlgebra,
};

use crate::report::{Report, Verdict};

fn alphabet(src: &str) -> Result<Alphabet, String> {
    Alphabet::parse_inline(src).map_err(|e| format!("alphabet: {e}"))
}

fn element(al: &Alphabet, src: &str) -> Result<FreeElement, String> {
    let e = parse_expr(src).map_err(|e| format!("`{src}`: {e}"))?;
    expand_expr(&e, al).map_err(|e| format!("`{src}`: {e}"))
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<SuperAlgebra, String> {
    SuperAlgebra::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn sparse(v: &[(usize, Rational)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let sign = match (n, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let mag = c.abs();
        let coeff = if mag == Rational::from(1) { String::new() } else { format!("{mag} ") };
        out.push_str(&format!("{sign}{coeff}e{}", i + 1));
    }
    out
}

fn tuple(t: &[usize]) -> String {
    let names: Vec<String> = t.iter().map(|i| format!("e{}", i + 1)).collect();
    format!("({})", names.join(", "))
}

fn element_report(al: &Alphabet, e: &FreeElement) -> Report {
    let text = al.format(e);
    let mut r = Report::new(None);
    r.line(text.clone()).field("element", json!(text));
    r
}

pub fn expand(alphabet_src: &str, expr: &str) -> Result<Report, String> {
    let al = alphabet(alphabet_src)?;
    Ok(element_report(&al, &element(&al, expr)?))
}

pub fn shuffle(alphabet_src: &str, left: &str, right: &str) -> Result<Report, String> {
    let al = alphabet(alphabet_src)?;
    Ok(element_report(&al, &super_shuffle(&element(&al, left)?, &element(&al, right)?)))
}

pub fn pmap(alphabet_src: &str, expr: &str) -> Result<Report, String> {
    let al = alphabet(alphabet_src)?;
    Ok(element_report(&al, &p_map(&element(&al, expr)?)))
}

pub fn is_special(alphabet_src: &str, expr: &str) -> Result<Report, String> {
    let al = alphabet(alphabet_src)?;
    let e = element(&al, expr)?;
    let special = is_tortkara_element(&e).map_err(|e| e.to_string())?;
    let mut r = Report::new(Some(if special { Verdict::Special } else { Verdict::NotSpecial }));
    r.line(format!("special: {special}"))
        .line(format!("element: {}", al.format(&e)))
        .field("special", json!(special))
        .field("element", json!(al.format(&e)));
    Ok(r)
}

pub fn ideal_check(alphabet_src: &str, gens: &str, degree: &str) -> Result<Report, String> {
    let al = alphabet(alphabet_src)?;
    let generators = gens
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| element(&al, s))
        .collect::<Result<Vec<_>, _>>()?;
    let d = Multidegree::parse(degree, &al).map_err(|e| format!("degree: {e}"))?;
    let spec = IdealSpec::new(generators, &al, d.total()).map_err(|e| e.to_string())?;
    let report = cohn_speciality_check(&spec, &d).map_err(|e| e.to_string())?;
    let dims = [
        ("tortkara-ideal-dim", report.tortkara_ideal.dim()),
        ("zinbiel-ideal-dim", report.zinbiel_ideal.dim()),
        ("st-dim", report.st.dim()),
        ("tortkara-part-dim", report.tortkara_part.dim()),
    ];
    let mut r = match &report.verdict {
        SpecialityVerdict::Special => Report::new(Some(Verdict::Special)),
        SpecialityVerdict::Exceptional { witness } => {
            let mut r = Report::new(Some(Verdict::Exceptional));
            r.line(format!("exceptional-witness: {}", al.format(witness)))
                .field("exceptional-witness", json!(al.format(witness)));
            r
        }
    };
    r.line(format!("multidegree: {}", d.display(&al))).field("multidegree", json!(d.display(&al).to_string()));
    for (k, v) in dims {
        r.line(format!("{k}: {v}")).field(k, json!(v));
    }
    Ok(r)
}

fn identity_line(kind: IdentityKind, v: &IdentityVerdict) -> (String, Value) {
    match v {
        IdentityVerdict::Holds => (format!("{kind}: holds"), json!({ "identity": kind.name(), "holds": true })),
        IdentityVerdict::Fails { tuple: t, residual } => (
            format!("{kind}: fails at {} with residual {}", tuple(t), sparse(residual)),
            json!({
                "identity": kind.name(),
                "holds": false,
                "tuple": t.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "residual": sparse(residual),
            }),
        ),
    }
}

pub fn verify(path: &Path, identities: &[String]) -> Result<Report, String> {
    let alg = load_algebra(path)?;
    let kinds = identities.iter().map(|s| s.trim().parse::<IdentityKind>()).collect::<Result<Vec<_>, _>>()?;
    let results: Vec<_> = kinds.iter().map(|&k| (k, verify_identity(&alg, k))).collect();
    let mut r = Report::new(Some(Verdict::from_bool(results.iter().all(|(_, v)| v.holds()))));
    let mut details = Vec::new();
    for (k, v) in &results {
        let (line, value) = identity_line(*k, v);
        r.line(line);
        details.push(value);
    }
    r.field("identities", Value::Array(details));
    Ok(r)
}

fn entry(name: &str) -> Result<CatalogEntry, String> {
    lookup(name).ok_or_else(|| format!("no catalog entry `{name}`"))
}

pub fn catalog(name: Option<&str>, envelope_generators: usize) -> Result<Report, String> {
    let entries = match name {
        Some(n) => vec![entry(n)?],
        None => all_entries(),
    };
    let options = CatalogOptions {
        envelope_generators: (envelope_generators > 0).then_some(envelope_generators),
        ..CatalogOptions::default()
    };
    let report = verify_catalog(&entries, &options);
    let mut r = Report::new(Some(Verdict::from_bool(report.mismatches.is_empty())));
    let yes = |b: bool| if b { "yes" } else { "no" };
    for row in &report.rows {
        let name = match &row.parameter {
            Some(t) => format!("{}={t})", row.name.trim_end_matches(')')),
            None => row.name.clone(),
        };
        let env = row.envelope_tortkara.map(|b| format!(" envelope={}", yes(b))).unwrap_or_default();
        r.line(format!(
            "{name}: anti-commutative={} tortkara={} malcev={} (expected {}) lie={} (expected {}){env}",
            yes(row.anti_commutative),
            yes(row.tortkara),
            yes(row.malcev),
            yes(row.expected_malcev),
            yes(row.lie),
            yes(row.expected_lie),
        ));
    }
    for m in &report.mismatches {
        r.line(format!("mismatch: {m}"));
    }
    r.field("rows", serde_json::to_value(&report.rows).expect("rows serialize"))
        .field("mismatches", json!(report.mismatches))
        .field("samples", json!(report.samples));
    Ok(r)
}

pub fn envelope(path: Option<&Path>, name: Option<&str>, parameter: Option<&str>, n: usize) -> Result<Report, String> {
    let alg = match (path, name) {
        (Some(p), _) => load_algebra(p)?,
        (None, Some(name)) => {
            let t = parameter
                .map(|s| s.parse::<Rational>().map_err(|_| format!("malformed parameter `{s}`")))
                .transpose()?;
            entry(name)?.algebra(t.as_ref()).map_err(|e| e.to_string())?
        }
        (None, None) => return Err("give --algebra or --entry".into()),
    };
    let env = grassmann_envelope(&alg, n).map_err(|e| e.to_string())?;
    let v = verify_identity(&env.algebra, IdentityKind::Tortkara);
    let (line, detail) = identity_line(IdentityKind::Tortkara, &v);
    let mut r = Report::new(Some(Verdict::from_bool(v.holds())));
    r.line(format!("generators: {n}"))
        .line(format!("envelope-dim: {}", env.algebra.dim()))
        .line(line)
        .field("generators", json!(n))
        .field("envelope-dim", json!(env.algebra.dim()))
        .field("identity", detail);
    Ok(r)
}

fn rb_failure(e: RotaBaxterError) -> Result<Report, String> {
    match e {
        RotaBaxterError::NotRotaBaxter { .. }
        | RotaBaxterError::NotSupercommutativeAssociative { .. }
        | RotaBaxterError::Tower { .. } => {
            let mut r = Report::new(Some(Verdict::Fails));
            r.line(format!("reason: {e}")).field("reason", json!(e.to_string()));
            Ok(r)
        }
        other => Err(other.to_string()),
    }
}

pub fn rb_tower(algebra: &Path, operator: &Path, levels: usize) -> Result<Report, String> {
    let alg = load_algebra(algebra)?;
    let op = GradedOperator::parse(&read(operator)?, alg.even_dim(), alg.odd_dim())
        .map_err(|e| format!("{}: {e}", operator.display()))?;
    let z = match derived_product(&alg, &op) {
        Ok(z) => z,
        Err(e) => return rb_failure(e),
    };
    if op.parity().is_odd() {
        let v = verify_identity(&z, IdentityKind::OddZinbiel);
        let (line, detail) = identity_line(IdentityKind::OddZinbiel, &v);
        let mut r = Report::new(Some(Verdict::from_bool(v.holds())));
        r.line("operator: odd").line(line).line("# derived product").line(z.to_text().trim_end());
        r.field("operator", json!("odd")).field("identity", detail).field("levels", json!([z.to_text()]));
        return Ok(r);
    }
    let tower = match derived_tower(&z, &op, levels) {
        Ok(t) => t,
        Err(e) => return rb_failure(e),
    };
    let mut closed_form = Vec::new();
    for (n, level) in tower.iter().enumerate() {
        let b = binomial_product(&alg, &op, n).map_err(|e| e.to_string())?;
        closed_form.push(&b == level);
    }
    let mut r = Report::new(Some(Verdict::from_bool(closed_form.iter().all(|&b| b))));
    r.line("operator: even");
    for (n, ok) in closed_form.iter().enumerate() {
        r.line(format!(
            "level {n}: super-zinbiel holds, operator rota-baxter, binomial closed form {}",
            if *ok { "matches" } else { "differs" }
        ));
    }
    for (n, level) in tower.iter().enumerate() {
        r.line(format!("# level {n}")).line(level.to_text().trim_end());
    }
    r.field("operator", json!("even"))
        .field("binomial-matches", json!(closed_form))
        .field("levels", json!(tower.iter().map(SuperAlgebra::to_text).collect::<Vec<_>>()));
    Ok(r)
}
