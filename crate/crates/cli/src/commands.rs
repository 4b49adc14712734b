use graphent::alt_css::{noise_css, peps_css, ProductMixture};
use graphent::graph::{lc_orbit, max_independent_set, OrbitSummary};
use graphent::lattices::{gap_exact, gap_formula, generate_lattice, LatticeKind, LatticeSpec};
use graphent::measures::{
    closest_separable_state, css_stabilizer_form, evaluate, minimal_decomposition, BoundsReport,
    MeasureValue, Measures, SeparableStateDescription,
};
use graphent::oracle::{
    best_product_overlap, decomposition_vector, max_abs_diff, mixture_density, overlap2,
    pauli_dense, pauli_sum_density, product_vector, relative_entropy_pure, statevector,
    DENSITY_LIMIT,
};
use graphent::stabilizer::{generators_from_graph, restricted_subgroup, stabilized_product_basis};
use graphent::{Error, Graph};
use serde::Serialize;

use crate::{
    GraphInput, Method, Outcome, EXIT_BOUNDS_DIFFER, EXIT_METHODS_DISAGREE, EXIT_VERIFY_FAILED,
};

const DENSE_TOL: f64 = 1e-12;
const REE_TOL: f64 = 1e-9;
const PRODUCT_RESTARTS: usize = 50;
const PRODUCT_ITERATIONS: usize = 60;

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

fn labels(path: &[usize]) -> Vec<usize> {
    path.iter().map(|v| v + 1).collect()
}

#[derive(Serialize)]
struct Term {
    sign: i8,
    state: String,
}

#[derive(Serialize)]
struct Css {
    method: &'static str,
    components: Vec<String>,
    weight: f64,
}

impl Css {
    fn new(method: &'static str, d: &SeparableStateDescription) -> Self {
        Css {
            method,
            components: d.components.iter().map(|c| c.to_string()).collect(),
            weight: d.weight,
        }
    }
}

#[derive(Serialize)]
struct OracleChecks {
    relative_entropy: f64,
    cps_overlap: f64,
    best_product_overlap: f64,
}

#[derive(Serialize)]
struct Report<'a> {
    graph: &'a Graph,
    n: usize,
    bounds: &'a BoundsReport,
    measures: &'a Measures,
    /// The graph the decomposition is written for.
    representative: &'a Graph,
    decomposition: Vec<Term>,
    css: Css,
    cps: String,
    maximally_entangled: bool,
    lc_path: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleChecks>,
}

pub(crate) fn analyze(g: &Graph, input: &GraphInput, oracle: bool) -> Result<Outcome, String> {
    let r = evaluate(g, input.orbit_cap).map_err(|e| e.to_string())?;
    let oracle = if oracle {
        if g.n() > DENSITY_LIMIT {
            return Err(format!("--oracle needs N <= {DENSITY_LIMIT}"));
        }
        let psi = statevector(g).map_err(|e| e.to_string())?;
        let omega = mixture_density(&r.css.components).map_err(|e| e.to_string())?;
        Some(OracleChecks {
            relative_entropy: relative_entropy_pure(&psi, &omega).value,
            cps_overlap: overlap2(&psi, &r.cps).map_err(|e| e.to_string())?,
            best_product_overlap: best_product_overlap(
                &psi,
                PRODUCT_RESTARTS,
                PRODUCT_ITERATIONS,
                input.seed,
            ),
        })
    } else {
        None
    };
    let report = Report {
        graph: g,
        n: g.n(),
        bounds: &r.bounds,
        measures: &r.measures,
        representative: r.bounds.representative(),
        decomposition: r
            .decomposition
            .terms
            .iter()
            .map(|(sign, s)| Term {
                sign: *sign,
                state: s.to_string(),
            })
            .collect(),
        css: Css::new("stabilizer", &r.css),
        cps: r.cps.to_string(),
        maximally_entangled: r.maximally_entangled,
        lc_path: labels(&r.lc_path),
        oracle,
    };
    let code = match r.measures.schmidt {
        MeasureValue::Exact(_) => 0,
        MeasureValue::Interval(..) => EXIT_BOUNDS_DIFFER,
    };
    Ok(Outcome {
        text: json(&report)?,
        code,
    })
}

#[derive(Serialize)]
struct Verdict {
    verdict: &'static str,
    compared: &'static str,
    max_deviation: Option<f64>,
}

fn css_code(agreement: Option<&Verdict>, not_stabilizer: bool) -> u8 {
    match agreement {
        Some(v) if v.verdict == "differ" => EXIT_METHODS_DISAGREE,
        _ if not_stabilizer => EXIT_METHODS_DISAGREE,
        _ => 0,
    }
}

#[derive(Serialize)]
struct CssReport<'a> {
    graph: &'a Graph,
    alpha: Vec<usize>,
    css: Vec<Css>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<Verdict>,
}

fn as_stabilizer(method: &str, m: &ProductMixture) -> Result<SeparableStateDescription, String> {
    m.as_stabilizer_mixture()
        .ok_or_else(|| format!("{method} construction is not a uniform stabilizer mixture"))
}

pub(crate) fn css(g: &Graph, method: Method) -> Result<Outcome, String> {
    let alpha = max_independent_set(g);
    let beta = alpha.complement(g.n());
    let err = |e: Error| e.to_string();
    let want = |m: Method| method == m || method == Method::All;

    let mut out = Vec::new();
    let mut dense = Vec::new();
    let small = g.n() <= DENSITY_LIMIT;
    if want(Method::Stabilizer) {
        let d = closest_separable_state(g).map_err(err)?;
        if small {
            dense.push(mixture_density(&d.components).map_err(err)?);
            let sum = css_stabilizer_form(g).map_err(err)?;
            dense.push(pauli_sum_density(&sum.elements).map_err(err)?);
        }
        out.push(("stabilizer", d));
    }
    let mut not_stabilizer = None;
    if want(Method::Peps) {
        let (_, m) = peps_css(g, alpha).map_err(err)?;
        if small {
            dense.push(m.dense().map_err(err)?);
        }
        match as_stabilizer("peps", &m) {
            Ok(d) => out.push(("peps", d)),
            Err(e) => not_stabilizer = Some(e),
        }
    }
    if want(Method::Noise) {
        let m = noise_css(g, beta).map_err(err)?;
        if small {
            dense.push(m.dense().map_err(err)?);
        }
        match as_stabilizer("noise", &m) {
            Ok(d) => out.push(("noise", d)),
            Err(e) => not_stabilizer = Some(e),
        }
    }
    if let Some(e) = &not_stabilizer {
        eprintln!("warning: {e}");
    }

    let agreement = (method == Method::All).then(|| {
        if small {
            let dev = dense[1..]
                .iter()
                .map(|m| max_abs_diff(m, &dense[0]))
                .fold(0.0, f64::max);
            Verdict {
                verdict: if dev <= DENSE_TOL && not_stabilizer.is_none() {
                    "equal"
                } else {
                    "differ"
                },
                compared: "dense",
                max_deviation: Some(dev),
            }
        } else {
            let sets: Vec<Vec<String>> = out
                .iter()
                .map(|(_, d)| {
                    let mut v: Vec<String> = d.components.iter().map(|c| c.to_string()).collect();
                    v.sort();
                    v
                })
                .collect();
            let same = not_stabilizer.is_none() && sets.windows(2).all(|w| w[0] == w[1]);
            Verdict {
                verdict: if same { "equal" } else { "differ" },
                compared: "components",
                max_deviation: None,
            }
        }
    });
    let code = css_code(agreement.as_ref(), not_stabilizer.is_some());
    let report = CssReport {
        graph: g,
        alpha: alpha.labels(),
        css: out.iter().map(|(name, d)| Css::new(name, d)).collect(),
        agreement,
    };
    Ok(Outcome {
        text: json(&report)?,
        code,
    })
}

#[derive(Serialize)]
struct OrbitReport<'a> {
    graph: &'a Graph,
    #[serde(flatten)]
    orbit: &'a OrbitSummary,
}

pub(crate) fn orbit(g: &Graph, input: &GraphInput) -> Result<Outcome, String> {
    let summary = lc_orbit(g, input.orbit_cap);
    Ok(Outcome {
        text: json(&OrbitReport {
            graph: g,
            orbit: &summary,
        })?,
        code: 0,
    })
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("bad size list {s:?}; use 4, 2..5 or 2,4,6");
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let sizes = if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        (num(a)?..=num(b)?).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if sizes.is_empty() {
        return Err(bad());
    }
    Ok(sizes)
}

#[derive(Serialize)]
struct LatticeRow {
    kind: LatticeKind,
    size: usize,
    #[serde(rename = "N")]
    n: usize,
    matching: Option<usize>,
    vertex_cover: Option<usize>,
    gap_exact: Option<String>,
    gap_formula: String,
    difference: Option<String>,
}

pub(crate) fn lattice(
    kind: LatticeKind,
    sizes: &str,
    exact: bool,
    node_budget: u64,
) -> Result<Outcome, String> {
    let sizes = parse_sizes(sizes)?;
    if kind == LatticeKind::Triangular {
        eprintln!("note: triangular formula terms sqrt(N) - 3j are clamped at zero");
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for size in sizes {
        let g = generate_lattice(LatticeSpec::new(kind, size)).map_err(|e| e.to_string())?;
        let formula = gap_formula(kind, g.n()).map_err(|e| e.to_string())?;
        let mut row = LatticeRow {
            kind,
            size,
            n: g.n(),
            matching: None,
            vertex_cover: None,
            gap_exact: None,
            gap_formula: format!("{formula:.6}"),
            difference: None,
        };
        if exact {
            match gap_exact(&g, node_budget) {
                Ok((m, b, gap)) => {
                    row.matching = Some(m);
                    row.vertex_cover = Some(b);
                    row.gap_exact = Some(gap.to_string());
                    row.difference = Some(format!("{:.6}", gap as f64 - formula));
                }
                Err(Error::Budget(_)) => row.gap_exact = Some("timeout".into()),
                Err(e) => return Err(e.to_string()),
            }
        }
        w.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    Ok(Outcome {
        text: String::from_utf8(bytes).map_err(|e| e.to_string())?,
        code: 0,
    })
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    graph: &'a Graph,
    value: MeasureValue,
    maximally_entangled: bool,
    checks: Vec<Check>,
    pass: bool,
}

fn dev_check(name: &'static str, dev: f64, tol: f64) -> Check {
    Check {
        name,
        pass: dev <= tol,
        detail: format!("max deviation {dev:.3e} (tolerance {tol:e})"),
    }
}

fn verify_code(checks: &[Check]) -> (bool, u8) {
    let pass = checks.iter().all(|c| c.pass);
    (pass, if pass { 0 } else { EXIT_VERIFY_FAILED })
}

pub(crate) fn verify(g: &Graph, input: &GraphInput) -> Result<Outcome, String> {
    if g.n() > DENSITY_LIMIT {
        return Err(format!("verify needs N <= {DENSITY_LIMIT}"));
    }
    let err = |e: Error| e.to_string();
    let r = evaluate(g, input.orbit_cap).map_err(err)?;
    let rep = r.bounds.representative();
    let psi = statevector(g).map_err(err)?;
    let mut checks = Vec::new();

    let rebuilt = decomposition_vector(&minimal_decomposition(rep).map_err(err)?).map_err(err)?;
    let want = statevector(rep).map_err(err)?;
    let dev = want
        .iter()
        .zip(rebuilt.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    checks.push(dev_check("reconstruction", dev, DENSE_TOL));

    let mut dev: f64 = 0.0;
    for p in generators_from_graph(g).generators() {
        let moved = pauli_dense(p).map_err(err)? * &psi;
        dev = dev.max((moved - &psi).iter().map(|z| z.norm()).fold(0.0, f64::max));
    }
    checks.push(dev_check("generators fix the state", dev, DENSE_TOL));

    let alpha = max_independent_set(rep);
    let sub = restricted_subgroup(&generators_from_graph(rep), alpha);
    let mut dev: f64 = 0.0;
    for s in stabilized_product_basis(rep, alpha).map_err(err)? {
        let v = product_vector(&s).map_err(err)?;
        for e in sub.elements().map_err(err)? {
            dev = dev.max(
                (pauli_dense(&e).map_err(err)? * &v - &v)
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max),
            );
        }
    }
    checks.push(dev_check("product basis eigenvalues", dev, DENSE_TOL));

    let omega = mixture_density(&r.css.components).map_err(err)?;
    let ree = relative_entropy_pure(&psi, &omega).value;
    checks.push(Check {
        name: "relative entropy",
        pass: (ree - r.bounds.upper as f64).abs() <= REE_TOL,
        detail: format!("S(rho||omega) = {ree:.12}, upper bound {}", r.bounds.upper),
    });

    let ov = overlap2(&psi, &r.cps).map_err(err)?;
    let cert = 0.5f64.powi(r.bounds.upper as i32);
    checks.push(Check {
        name: "product overlap",
        pass: (ov - cert).abs() <= DENSE_TOL,
        detail: format!("|<phi|G>|^2 = {ov:.12}, certificate {cert}"),
    });

    let mixture =
        mixture_density(&closest_separable_state(rep).map_err(err)?.components).map_err(err)?;
    let sum = pauli_sum_density(&css_stabilizer_form(rep).map_err(err)?.elements).map_err(err)?;
    checks.push(dev_check(
        "mixture equals stabilizer sum",
        max_abs_diff(&mixture, &sum),
        DENSE_TOL,
    ));

    let own = max_independent_set(g);
    let reference =
        mixture_density(&closest_separable_state(g).map_err(err)?.components).map_err(err)?;
    let peps = peps_css(g, own).map_err(err)?.1.dense().map_err(err)?;
    let noise = noise_css(g, own.complement(g.n()))
        .map_err(err)?
        .dense()
        .map_err(err)?;
    let dev = max_abs_diff(&peps, &reference).max(max_abs_diff(&noise, &reference));
    checks.push(dev_check("css methods agree", dev, DENSE_TOL));

    let best = best_product_overlap(&psi, PRODUCT_RESTARTS, PRODUCT_ITERATIONS, input.seed);
    let ceiling = 0.5f64.powi(r.bounds.lower as i32);
    checks.push(Check {
        name: "heuristic product search",
        pass: best <= ceiling + REE_TOL,
        detail: format!("best found {best:.12}, ceiling 2^-{}", r.bounds.lower),
    });

    let (pass, code) = verify_code(&checks);
    let report = VerifyReport {
        graph: g,
        value: r.measures.schmidt,
        maximally_entangled: r.maximally_entangled,
        checks,
        pass,
    };
    Ok(Outcome {
        text: json(&report)?,
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Neither code is reachable from a correct build, so the decision is
    // checked on its own.
    #[test]
    fn disagreement_codes() {
        let differ = Verdict {
            verdict: "differ",
            compared: "dense",
            max_deviation: Some(0.5),
        };
        let equal = Verdict {
            verdict: "equal",
            compared: "dense",
            max_deviation: Some(0.0),
        };
        assert_eq!(css_code(Some(&differ), false), EXIT_METHODS_DISAGREE);
        assert_eq!(css_code(Some(&equal), true), EXIT_METHODS_DISAGREE);
        assert_eq!(css_code(Some(&equal), false), 0);
        assert_eq!(css_code(None, false), 0);

        let check = |pass| Check {
            name: "x",
            pass,
            detail: String::new(),
        };
        assert_eq!(
            verify_code(&[check(true), check(false)]),
            (false, EXIT_VERIFY_FAILED)
        );
        assert_eq!(verify_code(&[check(true)]), (true, 0));
    }

    #[test]
    fn size_lists() {
        assert_eq!(parse_sizes("4").unwrap(), vec![4]);
        assert_eq!(parse_sizes("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_sizes("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_sizes("1, 3,5").unwrap(), vec![1, 3, 5]);
        assert!(parse_sizes("5..2").is_err());
        assert!(parse_sizes("x").is_err());
    }
}
