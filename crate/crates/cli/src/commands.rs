use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

use tightkit::complex::{manifold_check, ManifoldReport};
use tightkit::feasibility::{
    check_parameters, cor514_topology_list, enumerate_table1, enumerate_table2,
    enumerate_table2_verbose, enumerate_table3, spreer_min_beta,
};
use tightkit::homology::{betti, format_rational, integral_homology, FieldSpec};
use tightkit::io::{fixtures, ComplexDocument};
use tightkit::sphere::{is_2sphere, link_profile, primitive_decomposition};
use tightkit::tightness::{
    brute_force_tight, mu_vector_with, sigma_vector_with, tightness_criterion_3manifold,
    SigmaOptions, TightnessReport, Witness, DEFAULT_BRUTE_FORCE_CAP,
};
use tightkit::{Error, Result, SimplicialComplex};

use crate::{Command, FeasibleArgs, InputArgs, Method};

pub(crate) fn run(cmd: Command) -> Result<String> {
    match cmd {
        Command::Analyze(input) => analyze(&input),
        Command::Tight { input, method } => tight(&input, method),
        Command::Decompose { input, link } => decompose(&input, link),
        Command::Sigma { input, cap } => sigma(&input, cap),
        Command::Feasible(args) => feasible(&args),
        Command::Fixtures {
            name,
            out,
            seed,
            json,
        } => fixtures_cmd(name, out, seed, json),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn flags(m: &ManifoldReport) -> String {
    let mut out = Vec::new();
    for (on, name) in [
        (m.is_pure, "pure"),
        (m.is_connected, "connected"),
        (m.is_pseudomanifold, "pseudomanifold"),
        (m.is_closed_surface, "closed surface"),
        (m.is_closed_3manifold, "closed 3-manifold"),
    ] {
        if on {
            out.push(name);
        }
    }
    if out.is_empty() {
        "none".into()
    } else {
        out.join(", ")
    }
}

fn analyze(input: &InputArgs) -> Result<String> {
    let (name, x) = input.load()?;
    let fields = input.fields()?;
    let report = manifold_check(&x);
    let bettis: Vec<_> = fields.iter().map(|&f| betti(&x, f, false)).collect();
    let h = integral_homology(&x);
    let profile = report
        .is_closed_3manifold
        .then(|| link_profile(&x))
        .transpose()?;
    if input.json {
        return Ok(pretty(&json!({
            "name": name,
            "f_vector": x.f_vector(),
            "neighbourly": x.is_neighbourly(),
            "is_2sphere": is_2sphere(&x),
            "manifold": report,
            "betti": bettis,
            "integral_homology": h,
            "link_profile": profile,
        })));
    }
    let mut s = String::new();
    writeln!(s, "complex: {name}").unwrap();
    writeln!(s, "f-vector: {}", list(&x.f_vector())).unwrap();
    writeln!(s, "flags: {}", flags(&report)).unwrap();
    writeln!(s, "neighbourly: {}", x.is_neighbourly()).unwrap();
    writeln!(s, "euler characteristic: {}", report.euler_characteristic).unwrap();
    for b in &bettis {
        writeln!(s, "betti over {}: {}", b.field, list(&b.values)).unwrap();
    }
    let groups: Vec<String> = h
        .degrees
        .iter()
        .enumerate()
        .map(|(i, g)| format!("H{i} = {g}"))
        .collect();
    writeln!(s, "integral homology: {}", groups.join(", ")).unwrap();
    if let Some(p) = profile {
        writeln!(
            s,
            "link profile: k = {}, locally stacked = {}, locally icosian = {}, link screen = {}",
            p.k_total,
            p.is_locally_stacked,
            p.is_locally_icosian,
            if p.link_screen_pass { "pass" } else { "fail" }
        )
        .unwrap();
        for v in &p.vertices {
            writeln!(
                s,
                "  vertex {}: k = {}, l = {}, other = {}",
                v.vertex, v.k, v.l, v.other
            )
            .unwrap();
        }
    }
    Ok(s.trim_end().to_string())
}

/// Requested fields plus the primes dividing integral torsion.
fn tight_fields(input: &InputArgs, x: &SimplicialComplex) -> Result<(Vec<FieldSpec>, Vec<u64>)> {
    let mut fields = input.fields()?;
    let have: BTreeSet<FieldSpec> = fields.iter().copied().collect();
    let torsion = integral_homology(x).torsion_primes();
    for &p in &torsion {
        let f = FieldSpec::prime(p)?;
        if !have.contains(&f) {
            fields.push(f);
        }
    }
    Ok((fields, torsion))
}

fn describe(r: &TightnessReport) -> String {
    let mut s = format!("{:?} via {:?} over {}", r.verdict, r.method, r.field);
    match &r.witness {
        Some(Witness::Disconnected) => s.push_str(" (complex is disconnected)"),
        Some(Witness::NonInjective { vertices, degree }) => write!(
            s,
            " (witness: H{degree} of the subcomplex on {} is not injective)",
            list(vertices)
        )
        .unwrap(),
        None => {}
    }
    for t in &r.criteria_trace {
        write!(
            s,
            "\n    {}: {} [{}]",
            t.condition,
            t.value,
            if t.pass { "pass" } else { "fail" }
        )
        .unwrap();
    }
    s
}

fn tight(input: &InputArgs, method: Method) -> Result<String> {
    let (name, x) = input.load()?;
    let (fields, torsion) = tight_fields(input, &x)?;
    let closed3 = manifold_check(&x).is_closed_3manifold;
    let mut reports = Vec::new();
    for &f in &fields {
        let brute = match method {
            Method::Brute => true,
            Method::Criterion => false,
            Method::Auto => x.num_vertices() <= DEFAULT_BRUTE_FORCE_CAP || !closed3,
        };
        if brute {
            reports.push(brute_force_tight(&x, f)?);
        }
        if method == Method::Criterion || (method == Method::Auto && closed3) {
            reports.push(tightness_criterion_3manifold(&x, f)?);
        }
    }
    if input.json {
        return Ok(pretty(&json!({
            "name": name,
            "fields": fields,
            "torsion_primes": torsion,
            "scope": "the listed fields only",
            "reports": reports,
        })));
    }
    let mut s = format!("complex: {name}\n");
    let names: Vec<String> = fields.iter().map(|f| f.to_string()).collect();
    writeln!(
        s,
        "fields checked: {} (torsion primes {})",
        names.join(", "),
        list(&torsion)
    )
    .unwrap();
    for r in &reports {
        writeln!(s, "{}", describe(r)).unwrap();
    }
    Ok(s.trim_end().to_string())
}

fn decompose(input: &InputArgs, link: Option<u32>) -> Result<String> {
    let (name, x) = input.load()?;
    let (label, s) = match link {
        Some(v) => (format!("link of {v} in {name}"), x.link(v)?),
        None => (name, x),
    };
    let tree = primitive_decomposition(&s)?;
    if input.json {
        let nodes: Vec<Value> = tree
            .nodes
            .iter()
            .zip(&tree.classes)
            .map(|(n, c)| json!({"class": c, "vertices": n.vertices(), "f_vector": n.f_vector()}))
            .collect();
        return Ok(pretty(&json!({
            "name": label,
            "nodes": nodes,
            "edges": tree.edges,
            "elimination_order": tree.elimination_order,
        })));
    }
    let mut out = format!("sphere: {label}\n");
    writeln!(
        out,
        "summands: {} ({} tetrahedron, {} icosahedron, {} other)",
        tree.nodes.len(),
        tree.standard_count(),
        tree.icosahedron_count(),
        tree.other_count()
    )
    .unwrap();
    for (i, (n, c)) in tree.nodes.iter().zip(&tree.classes).enumerate() {
        writeln!(out, "  [{i}] {} on {}", c.name(), list(n.vertices())).unwrap();
    }
    for e in &tree.edges {
        writeln!(out, "  [{}] -- [{}] along {}", e.a, e.b, e.label).unwrap();
    }
    writeln!(out, "elimination order: {}", list(&tree.elimination_order)).unwrap();
    Ok(out.trim_end().to_string())
}

fn sigma(input: &InputArgs, cap: usize) -> Result<String> {
    let (name, x) = input.load()?;
    let opts = SigmaOptions {
        cap,
        ..Default::default()
    };
    let mut rows = Vec::new();
    for f in input.fields()? {
        let s = sigma_vector_with(&x, f, opts)?;
        let m = mu_vector_with(&x, f, opts)?;
        rows.push((s, m));
    }
    if input.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(s, m)| json!({"sigma": s, "mu": m}))
            .collect();
        return Ok(pretty(&json!({"name": name, "results": v})));
    }
    // rationals serialize as exact strings
    let fmt = |v: Value| {
        let parts: Vec<String> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_str().unwrap().to_string())
            .collect();
        format!("({})", parts.join(", "))
    };
    let mut out = format!("complex: {name}\n");
    for (s, m) in &rows {
        writeln!(out, "over {}:", s.field).unwrap();
        let (sv, mv) = (to_value(s), to_value(m));
        writeln!(out, "  sigma      = {}", fmt(sv["sigma"].clone())).unwrap();
        writeln!(out, "  sigma-star = {}", fmt(sv["sigma_star"].clone())).unwrap();
        writeln!(out, "  mu         = {}", fmt(mv["mu"].clone())).unwrap();
    }
    Ok(out.trim_end().to_string())
}

fn feasible(a: &FeasibleArgs) -> Result<String> {
    if let (Some(n), Some(b)) = (a.n, a.beta1) {
        let r = check_parameters(n, b)?;
        if a.json {
            return Ok(pretty(&to_value(&r)));
        }
        let k =
            r.k.as_ref()
                .map_or("not integral".to_string(), |k| k.to_string());
        let f = &r.flags;
        return Ok(format!(
            "n = {n}, beta1 = {b}, k = {k}\ncongruence mod 776: {}\nlower bound: {} (stacked equality: {})\nupper bound (b): {} (equality: {})\nupper bound (617n): {} (icosian equality: {})\nfeasible: {}",
            f.congruence_776,
            f.lower_bound,
            f.lower_bound_stacked_equality,
            f.upper_bound_b,
            f.upper_bound_b_equality,
            f.upper_bound_512,
            f.icosian_equality,
            r.feasible
        ));
    }
    if let (Some(t), Some(nmax)) = (a.table, a.nmax) {
        let rows = match (t, a.verbose) {
            (1, _) => enumerate_table1(nmax)?,
            (2, false) => enumerate_table2(nmax)?,
            (2, true) => enumerate_table2_verbose(nmax)?,
            _ => enumerate_table3(nmax)?,
        };
        if a.json {
            return Ok(pretty(&json!({"table": t, "nmax": nmax, "rows": rows})));
        }
        let mut s = format!("table {t}, n <= {nmax}: {} rows\n", rows.len());
        for r in &rows {
            writeln!(s, "  n = {:>6}  beta1 = {:>9}  k = {}", r.n, r.beta1, r.k).unwrap();
        }
        return Ok(s.trim_end().to_string());
    }
    if let Some(bmax) = a.topology {
        let l = cor514_topology_list(bmax);
        if a.json {
            return Ok(pretty(&to_value(&l)));
        }
        let mut s = String::new();
        for e in &l {
            writeln!(
                s,
                "k = {:>4}  n = {:>4}  {}",
                e.k,
                e.n,
                e.homeomorphism_types.join(" or ")
            )
            .unwrap();
        }
        return Ok(s.trim_end().to_string());
    }
    if let (Some(n), Some(ell)) = (a.spreer, a.ell) {
        let b = spreer_min_beta(n, ell)?;
        if a.json {
            return Ok(pretty(&to_value(&b)));
        }
        let mut s = format!(
            "n = {n}, ell = {ell}: beta_ell >= {} (exact {})",
            b.value,
            format_rational(&b.exact)
        );
        if ell == 1 && n >= 5 {
            let c = check_parameters(n, b.value)?;
            write!(
                s,
                "\nfor comparison, the 617n bound at beta1 = {} holds: {}",
                b.value, c.flags.upper_bound_512
            )
            .unwrap();
        }
        return Ok(s);
    }
    Err(Error::InvalidParameter(
        "give --n/--beta1, --table/--nmax, --topology, or --spreer/--ell".into(),
    ))
}

fn fixtures_cmd(
    name: Option<String>,
    out: Option<std::path::PathBuf>,
    seed: u64,
    json: bool,
) -> Result<String> {
    let Some(name) = name else {
        let cat = fixtures::catalog();
        if json {
            return Ok(pretty(&to_value(&cat)));
        }
        let lines: Vec<String> = cat
            .iter()
            .map(|f| format!("{:<20} {}", f.name, f.description))
            .collect();
        return Ok(lines.join("\n"));
    };
    let x = fixtures::load_fixture(&name, seed)?;
    let doc = ComplexDocument::from_complex(&name, &x);
    match out {
        Some(path) => {
            std::fs::write(&path, doc.to_json() + "\n")?;
            Ok(format!("wrote {name} to {}", path.display()))
        }
        None => Ok(doc.to_json()),
    }
}
