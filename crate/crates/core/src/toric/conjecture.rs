use serde::Serialize;

use super::{
    all_s_pairs_reduce, buchberger_binomial_with, in_kernel, initial_ideal, normal_form, Binomial, BinomialIdeal,
    HilbertData, MonomialOrder,
};
use crate::chroma;
use crate::error::{Error, Result};
use crate::partition::{self, Partition};
use crate::pid;
use crate::report::{findings_markdown, Compared, Finding, Verdict};
use crate::Limits;

const ORACLE_DEGREE: usize = 8;

const SEMANTICS: &str = "dimension = Krull dimension of the affine quotient k[x]/I; \
degree = Hilbert numerator with all (1 - t) factors removed, at t = 1; \
order = grevlex with variables in the listed order, first largest";

/// One membership probe of a kernel binomial against the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelProbe {
    pub binomial: String,
    pub in_kernel: bool,
    /// `None` when the binomial reduces to zero.
    pub normal_form: Option<String>,
}

impl KernelProbe {
    pub fn in_ideal(&self) -> bool {
        self.normal_form.is_none()
    }
}

/// Conventions, the pipeline's intermediate objects, and claimed-versus-computed rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub ell: usize,
    pub semantics: String,
    pub ideal: BinomialIdeal,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub initial_ideal: Vec<String>,
    pub hilbert: HilbertData,
    /// Highest degree compared against the standard-monomial count.
    pub oracle_degree: usize,
    pub oracle_agrees: bool,
    pub probes: Vec<KernelProbe>,
    pub findings: Vec<Finding>,
}

impl ConjectureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("### Conjecture {} at ell = {}\n\n", self.conjecture, self.ell);
        out.push_str(&format!("_{}_\n\n", self.semantics));
        out.push_str(&format!("variables: {}\n\n", self.variables.join(", ")));
        out.push_str("generators:\n");
        for g in &self.generators {
            out.push_str(&format!("- `{g}`\n"));
        }
        out.push_str("\nGröbner basis:\n");
        for g in &self.groebner_basis {
            out.push_str(&format!("- `{g}`\n"));
        }
        out.push_str(&format!("\ninitial ideal: <{}>\n\n", self.initial_ideal.join(", ")));
        out.push_str(&findings_markdown(&self.findings));
        if !self.probes.is_empty() {
            out.push_str("\n| kernel probe | in kernel | normal form |\n|---|---|---|\n");
            for p in &self.probes {
                out.push_str(&format!(
                    "| `{}` | {} | {} |\n",
                    p.binomial,
                    p.in_kernel,
                    p.normal_form.as_deref().unwrap_or("0")
                ));
            }
        }
        out
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.verdict == Verdict::Mismatch)
    }
}

struct Pipeline {
    basis: Vec<Binomial>,
    initial: Vec<String>,
    hilbert: HilbertData,
    oracle_agrees: bool,
    certified: bool,
    s_pairs_vanish: bool,
    basis_in_kernel: bool,
}

fn pipeline(ideal: &BinomialIdeal, limits: &Limits) -> Result<Pipeline> {
    let order = MonomialOrder::Grevlex;
    let run = buchberger_binomial_with(&ideal.generators, order, limits, true)?;
    let certs = run.certificates.as_ref().expect("tracked run");
    let certified = run
        .basis
        .iter()
        .zip(certs)
        .all(|(g, c)| c.proves(&ideal.generators, g));
    let s_pairs_vanish = all_s_pairs_reduce(&run.basis, order);
    let weights = ideal.weights.as_deref().unwrap_or(&[]);
    let basis_in_kernel = run
        .basis
        .iter()
        .map(|g| in_kernel(g, weights))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let mi = initial_ideal(&run.basis, order, ideal.nvars)?;
    let hilbert = super::hilbert_with(&mi, limits)?;
    let series: Vec<_> = hilbert.series(ORACLE_DEGREE);
    let counts = super::standard_monomial_counts(&mi, ORACLE_DEGREE);
    let oracle_agrees = series
        .iter()
        .zip(&counts)
        .all(|(s, &c)| *s == num_bigint::BigInt::from(c));
    Ok(Pipeline {
        initial: mi.display_with(&ideal.variable_names()),
        basis: run.basis,
        hilbert,
        oracle_agrees,
        certified,
        s_pairs_vanish,
        basis_in_kernel,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pipeline_findings(p: &Pipeline) -> Vec<Finding> {
    let ok = |b| if b { Verdict::Match } else { Verdict::Mismatch };
    vec![
        Finding::new("basis elements certified in the ideal", yes_no(p.certified), "yes", ok(p.certified)),
        Finding::new("all S-pairs reduce to zero", yes_no(p.s_pairs_vanish), "yes", ok(p.s_pairs_vanish)),
        Finding::new("basis elements in the kernel", yes_no(p.basis_in_kernel), "yes", ok(p.basis_in_kernel)),
        Finding::new(
            format!("Hilbert series equals standard-monomial count through degree {ORACLE_DEGREE}"),
            yes_no(p.oracle_agrees),
            "yes",
            ok(p.oracle_agrees),
        ),
    ]
}

pub fn conjecture1_check(ell: usize) -> Result<ConjectureReport> {
    conjecture1_check_with(ell, &Limits::default())
}

/// The two-generator ideal on weights `(1, ..., ell, |mu|, |kappa|)`: one
/// generator per parity class of `1..ell`, each product minus the variable
/// whose weight is that class's sum.
pub fn conjecture1_check_with(ell: usize, limits: &Limits) -> Result<ConjectureReport> {
    if !(5..=10).contains(&ell) {
        return Err(Error::domain(format!("conjecture I audit needs 5 <= ell <= 10, got {ell}")));
    }
    let sep = chroma::colour_separation(&partition::staircase(ell)?)?;
    let mut weights: Vec<u64> = (1..=ell as u64).collect();
    weights.extend([sep.mu as u64, sep.kappa as u64]);
    let n = weights.len();
    let mut gens = Vec::new();
    for parity in [1, 0] {
        let class: Vec<usize> = (1..=ell).filter(|i| i % 2 == parity).collect();
        let sum: u64 = class.iter().map(|&i| i as u64).sum();
        let target = weights[ell..]
            .iter()
            .position(|&w| w == sum)
            .map(|p| p + ell)
            .ok_or_else(|| Error::domain(format!("no colour-class weight equals {sum}")))?;
        let lhs: Vec<usize> = class.iter().map(|i| i - 1).collect();
        gens.push((sum, Binomial::from_indices(n, &lhs, &[target])?));
    }
    // the |mu| generator first
    gens.sort_by_key(|(sum, _)| std::cmp::Reverse(*sum));
    let gens = gens.into_iter().map(|(_, g)| g).collect();
    let ideal = BinomialIdeal::new(n, Some(weights.clone()), gens)?;
    let names = ideal.variable_names();
    let p = pipeline(&ideal, limits)?;

    let mut findings = Vec::new();
    for (g, s) in ideal.generators.iter().zip(ideal.generator_strings()) {
        let k = in_kernel(g, &weights)?;
        findings.push(Finding::new(
            format!("{s} in kernel"),
            yes_no(k),
            "yes",
            if k { Verdict::Match } else { Verdict::Mismatch },
        ));
    }
    findings.push(Finding::compared("dimension", &Compared::new(p.hilbert.dimension, ell)));
    let claimed_degree = (ell.div_ceil(2) * (ell / 2)) as u64;
    findings.push(Finding::compared("degree", &Compared::new(p.hilbert.degree, claimed_degree)));
    findings.push(Finding::new(
        "generators already a Gröbner basis",
        yes_no(p.basis.len() == 2),
        "",
        Verdict::Skipped,
    ));

    // kernel binomials of degree <= 2 against the ideal
    let graver = pid::graver_1xn_with(&weights, 2, limits)?;
    let probe_x1sq = Binomial::from_indices(n, &[0, 0], &[1])?;
    let mut probes = vec![probe(&probe_x1sq, &weights, &p.basis, &names)?];
    for g in graver.elements() {
        if *g != probe_x1sq {
            probes.push(probe(g, &weights, &p.basis, &names)?);
        }
    }
    let inside = probes.iter().filter(|p| p.in_ideal()).count();
    findings.push(Finding::new(
        "degree <= 2 kernel binomials in the ideal",
        format!("{inside} of {}", probes.len()),
        format!("{} of {}", probes.len(), probes.len()),
        if inside == probes.len() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        },
    ));
    findings.extend(pipeline_findings(&p));

    Ok(ConjectureReport {
        conjecture: "I".into(),
        ell,
        semantics: SEMANTICS.into(),
        variables: names.clone(),
        generators: ideal.generator_strings(),
        groebner_basis: p.basis.iter().map(|b| b.display_with(&names)).collect(),
        initial_ideal: p.initial.clone(),
        hilbert: p.hilbert.clone(),
        oracle_degree: ORACLE_DEGREE,
        oracle_agrees: p.oracle_agrees,
        probes,
        findings,
        ideal,
    })
}

fn probe(b: &Binomial, weights: &[u64], basis: &[Binomial], names: &[String]) -> Result<KernelProbe> {
    Ok(KernelProbe {
        binomial: b.display_with(names),
        in_kernel: in_kernel(b, weights)?,
        normal_form: normal_form(b, basis, MonomialOrder::Grevlex).map(|nf| nf.display_with(names)),
    })
}

/// `<x_{j-1} x_{j+1} - x_j^2 : j = 1..ell-1>` in `x_0..x_ell`, weights `0..ell`.
pub fn cartoon_ideal(ell: usize) -> Result<BinomialIdeal> {
    if ell < 2 {
        return Err(Error::domain(format!("cartoon ideal needs ell >= 2, got {ell}")));
    }
    let n = ell + 1;
    let gens = (1..ell)
        .map(|j| Binomial::from_indices(n, &[j - 1, j + 1], &[j, j]))
        .collect::<Result<Vec<_>>>()?;
    BinomialIdeal::new(n, Some((0..n as u64).collect()), gens)
}

pub fn conjecture2_check(ell: usize) -> Result<ConjectureReport> {
    conjecture2_check_with(ell, &Limits::default())
}

pub fn conjecture2_check_with(ell: usize, limits: &Limits) -> Result<ConjectureReport> {
    if !(2..=8).contains(&ell) {
        return Err(Error::domain(format!("conjecture 2 audit needs 2 <= ell <= 8, got {ell}")));
    }
    let ideal = cartoon_ideal(ell)?;
    let weights = ideal.weights.clone().expect("cartoon weights");
    let names = ideal.variable_names();
    let p = pipeline(&ideal, limits)?;

    let mut findings = vec![Finding::compared(
        "quadric generators",
        &Compared::new(ideal.generators.len(), ell - 1),
    )];
    let all_in = ideal
        .generators
        .iter()
        .map(|g| in_kernel(g, &weights))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    findings.push(Finding::new(
        "generators vanish under x_i -> t^i",
        yes_no(all_in),
        "yes",
        if all_in { Verdict::Match } else { Verdict::Mismatch },
    ));
    findings.push(Finding::compared("dimension", &Compared::new(p.hilbert.dimension, 2)));
    findings.push(Finding::compared("degree", &Compared::new(p.hilbert.degree, 1u64 << (ell - 1))));
    findings.extend(pipeline_findings(&p));

    Ok(ConjectureReport {
        conjecture: "2".into(),
        ell,
        semantics: SEMANTICS.into(),
        variables: names.clone(),
        generators: ideal.generator_strings(),
        groebner_basis: p.basis.iter().map(|b| b.display_with(&names)).collect(),
        initial_ideal: p.initial.clone(),
        hilbert: p.hilbert.clone(),
        oracle_degree: ORACLE_DEGREE,
        oracle_agrees: p.oracle_agrees,
        probes: vec![],
        findings,
        ideal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartoonNode {
    pub id: String,
    pub top: bool,
    pub column: usize,
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartoonEdge {
    pub from: String,
    pub to: String,
    pub directed: bool,
}

/// Two rows of weighted nodes: column `j` has `ell - j` on top and
/// `ell - j - 1` below. Verticals point up except in the last column; the
/// top row points left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cartoon {
    pub ell: usize,
    pub nodes: Vec<CartoonNode>,
    pub edges: Vec<CartoonEdge>,
}

impl Cartoon {
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.nodes.iter().map(|n| n.weight).collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w.dedup();
        w
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cartoon {\n  rankdir=LR;\n");
        for row in [true, false] {
            let ids: Vec<&str> = self.nodes.iter().filter(|n| n.top == row).map(|n| n.id.as_str()).collect();
            out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
        }
        for n in &self.nodes {
            out.push_str(&format!("  {} [label=\"{}\"];\n", n.id, n.weight));
        }
        for e in &self.edges {
            let attr = if e.directed { "" } else { " [dir=none]" };
            out.push_str(&format!("  {} -> {}{};\n", e.from, e.to, attr));
        }
        out.push_str("}\n");
        out
    }
}

pub fn cartoon_diagram(lambda: &Partition) -> Result<Cartoon> {
    let ell = partition::require_staircase(lambda)?;
    if ell < 2 {
        return Err(Error::domain("cartoon needs ell >= 2"));
    }
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for j in 0..ell {
        nodes.push(CartoonNode {
            id: format!("t{j}"),
            top: true,
            column: j,
            weight: ell - j,
        });
        nodes.push(CartoonNode {
            id: format!("b{j}"),
            top: false,
            column: j,
            weight: ell - j - 1,
        });
        edges.push(CartoonEdge {
            from: format!("b{j}"),
            to: format!("t{j}"),
            directed: j + 1 < ell,
        });
        if j + 1 < ell {
            edges.push(CartoonEdge {
                from: format!("t{j}"),
                to: format!("t{}", j + 1),
                directed: true,
            });
        }
    }
    Ok(Cartoon { ell, nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::staircase;

    #[test]
    fn conjecture1_at_five() {
        let r = conjecture1_check(5).unwrap();
        assert_eq!(r.generators, vec!["x1*x3*x5 - x9", "x2*x4 - x6"]);
        assert_eq!((r.hilbert.dimension, r.hilbert.degree), (5, 6));
        assert!(r.oracle_agrees);
        assert_eq!(r.probes[0].binomial, "x1^2 - x2");
        assert!(r.probes[0].in_kernel);
        assert_eq!(r.probes[0].normal_form.as_deref(), Some("x1^2 - x2"));
        assert!(conjecture1_check(4).is_err());
    }

    #[test]
    fn conjecture1_at_six() {
        let r = conjecture1_check(6).unwrap();
        assert_eq!(r.generators, vec!["x2*x4*x6 - x12", "x1*x3*x5 - x9"]);
        assert_eq!((r.hilbert.dimension, r.hilbert.degree), (6, 9));
    }

    #[test]
    fn cartoon_ideals() {
        assert_eq!(cartoon_ideal(3).unwrap().generator_strings(), vec!["x0*x2 - x1^2", "x1*x3 - x2^2"]);
        assert_eq!(cartoon_ideal(2).unwrap().generators.len(), 1);
        let c5 = cartoon_ideal(5).unwrap();
        assert_eq!((c5.generators.len(), c5.nvars), (4, 6));
        assert!(cartoon_ideal(1).is_err());
    }

    #[test]
    fn conjecture2_small() {
        for (ell, deg) in [(2, 2), (3, 4), (4, 8)] {
            let r = conjecture2_check(ell).unwrap();
            assert_eq!((r.hilbert.dimension, r.hilbert.degree), (2, deg));
            assert!(r.oracle_agrees);
            assert_eq!(r.mismatches().count(), 0);
        }
    }

    #[test]
    fn cartoons() {
        let c = cartoon_diagram(&staircase(3).unwrap()).unwrap();
        let top: Vec<usize> = c.nodes.iter().filter(|n| n.top).map(|n| n.weight).collect();
        let bottom: Vec<usize> = c.nodes.iter().filter(|n| !n.top).map(|n| n.weight).collect();
        assert_eq!((top, bottom), (vec![3, 2, 1], vec![2, 1, 0]));
        assert_eq!(cartoon_diagram(&staircase(2).unwrap()).unwrap().weights(), vec![2, 1, 0]);
        assert_eq!(cartoon_diagram(&staircase(5).unwrap()).unwrap().weights(), vec![5, 4, 3, 2, 1, 0]);
        assert!(c.to_dot().contains("b2 -> t2 [dir=none];"));
        assert!(cartoon_diagram(&staircase(1).unwrap()).is_err());
    }
}
