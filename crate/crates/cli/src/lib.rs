//! Command-line front end for the `lambdaf` library.
//!
//! [`JobConfig`] is the parsed command line; [`run`] executes it and returns
//! the rendered output together with the process exit code.

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use lambdaf::eigengroup::{
    eigengroup, eigengroup_bruteforce, group_elements, inverse_eigengroup, AffineAut, Eigenform, Eigengroup,
    EigengroupDesc, SubgroupSpec,
};
use lambdaf::gf::parse_field;
use lambdaf::lambda_aut::{are_isomorphic, aut_group, LambdaAut};
use lambdaf::matrix::Matrix;
use lambdaf::modules::{simple_module_off_f, simple_module_on_f, spectrum, ModuleKind};
use lambdaf::{Caps, Error, FieldRef, FpSpace, Fq, OreAlgebra, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Eigengroup G_f over K and over the splitting field.
    Eigengroup,
    /// Canonical eigenform of f.
    Eigenform,
    /// Centre generators of Λ(f).
    Centre,
    /// Aut_K(Λ(f)) = S(K) ⋊ G_f(K) with generators up to --degree-bound.
    AutGroup,
    /// Whether Λ(f) ≅ Λ(g).
    Isomorphic,
    /// A simple module: off f with --xi/--rho, on f with --p-factor/--q.
    SimpleModule,
    /// Minimal primes, the completely prime spectrum and central points off f.
    Spectrum,
    /// A polynomial whose eigengroup is the subgroup given by --shape.
    InverseGroup,
    /// Structured eigengroup against exhaustive enumeration.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Trivial,
    Cyclic,
    ShiftOffImage,
    ShiftDoubleCoset,
    ShiftCyclic,
    Torus,
    Full,
}

/// One invocation of the tool.
#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "lambdaf", version, about = "Eigengroups, centres, automorphisms and simple modules of Λ(f) = K[x][y; f·d/dx]")]
pub struct JobConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Base field: GF(p), GF(p^m) or GF(q), optionally followed by " mod=c0,c1,...".
    #[arg(long)]
    pub field: String,
    /// The polynomial f in x, e.g. "x*(x+1)^2" or a coefficient vector "[0,1,2,1]".
    #[arg(long)]
    pub f: Option<String>,
    /// Second polynomial for `isomorphic`.
    #[arg(long)]
    pub g: Option<String>,
    /// Centre ν for `inverse-group`.
    #[arg(long)]
    pub nu: Option<String>,
    /// ξ for the off-f simple module (x^p acts by ξ).
    #[arg(long)]
    pub xi: Option<String>,
    /// ρ for the off-f simple module (z2 = y^p − c(x)y acts by ρ).
    #[arg(long)]
    pub rho: Option<String>,
    /// Irreducible factor p_i of f for the on-f simple module.
    #[arg(long = "p-factor")]
    pub p_factor: Option<String>,
    /// Element q of Λ(f), irreducible over K[x]/(p_i) as a polynomial in y.
    #[arg(long)]
    pub q: Option<String>,
    /// Subgroup shape for `inverse-group`.
    #[arg(long, value_enum)]
    pub shape: Option<Shape>,
    /// Eigenorder n for cyclic shapes.
    #[arg(long)]
    pub n: Option<u64>,
    /// F_p-basis of the shift space V, elements separated by ';'.
    #[arg(long)]
    pub basis: Option<String>,
    /// Degree bound for shift polynomials (aut-group) and central points (spectrum).
    #[arg(long = "degree-bound", default_value_t = 1)]
    pub degree_bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest field size admitted.
    #[arg(long, env = "LAMBDAF_FIELD_CAP")]
    pub cap: Option<u64>,
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl JobConfig {
    /// Canonical argument list; parsing it yields `self` again.
    pub fn to_args(&self) -> Vec<String> {
        let mut out = vec![value_name(self.command), "--field".into(), self.field.clone()];
        let mut opt = |name: &str, v: &Option<String>| {
            if let Some(v) = v {
                out.push(format!("--{name}"));
                out.push(v.clone());
            }
        };
        opt("f", &self.f);
        opt("g", &self.g);
        opt("nu", &self.nu);
        opt("xi", &self.xi);
        opt("rho", &self.rho);
        opt("p-factor", &self.p_factor);
        opt("q", &self.q);
        if let Some(s) = self.shape {
            out.extend(["--shape".into(), value_name(s)]);
        }
        if let Some(n) = self.n {
            out.extend(["--n".into(), n.to_string()]);
        }
        if let Some(b) = &self.basis {
            out.extend(["--basis".into(), b.clone()]);
        }
        out.extend(["--degree-bound".into(), self.degree_bound.to_string()]);
        out.extend(["--format".into(), value_name(self.format)]);
        out.extend(["--seed".into(), self.seed.to_string()]);
        if let Some(c) = self.cap {
            out.extend(["--cap".into(), c.to_string()]);
        }
        out
    }

    /// Parses an argument list without the program name.
    pub fn from_args<I, S>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        JobConfig::try_parse_from(std::iter::once(std::ffi::OsString::from("lambdaf")).chain(args.into_iter().map(Into::into)))
    }
}

/// Exit code and rendered streams of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure of a run, tagged with the flag whose text failed to parse.
#[derive(Debug)]
struct Failure {
    flag: Option<&'static str>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { flag: None, error }
    }
}

type Res<T> = Result<T, Failure>;

fn at(flag: &'static str) -> impl Fn(Error) -> Failure {
    move |error| Failure { flag: Some(flag), error }
}

fn missing(flag: &'static str) -> Failure {
    Failure { flag: Some(flag), error: Error::domain(format!("this command needs --{flag}")) }
}

pub fn run(config: &JobConfig) -> Outcome {
    match execute(config) {
        Ok(out) => Outcome { code: 0, stdout: out, stderr: String::new() },
        Err(Failure { flag, error }) => {
            let code = if error.is_internal() { 2 } else { 1 };
            let place = flag.map_or(String::new(), |f| format!(" (in --{f})"));
            Outcome { code, stdout: String::new(), stderr: format!("error{place}: {error}\n") }
        }
    }
}

struct Ctx {
    field: FieldRef,
    format: Format,
}

impl Ctx {
    fn elt(&self, a: Fq) -> String {
        self.field.format_short(a)
    }
}

fn parse_element(field: &FieldRef, text: &str, flag: &'static str) -> Res<Fq> {
    if text.trim_start().starts_with('[') {
        return field.parse_element(text).map_err(at(flag));
    }
    let p = Poly::parse(field, text).map_err(at(flag))?;
    if !p.is_constant() {
        return Err(Failure { flag: Some(flag), error: Error::domain(format!("expected a field element, got {p}")) });
    }
    Ok(p.coeff(0))
}

fn required<'a>(v: &'a Option<String>, flag: &'static str) -> Res<&'a str> {
    v.as_deref().ok_or_else(|| missing(flag))
}

fn poly_arg(field: &FieldRef, v: &Option<String>, flag: &'static str) -> Res<Poly> {
    Poly::parse(field, required(v, flag)?).map_err(at(flag))
}

fn monic_arg(field: &FieldRef, v: &Option<String>, flag: &'static str) -> Res<Poly> {
    let p = poly_arg(field, v, flag)?;
    if p.is_zero() || p.is_constant() || !p.is_monic() {
        return Err(Failure { flag: Some(flag), error: Error::domain(format!("expected a monic nonscalar polynomial, got {p}")) });
    }
    Ok(p)
}

fn execute(config: &JobConfig) -> Res<String> {
    let mut caps = Caps::default();
    if let Some(cap) = config.cap {
        caps.max_size = cap;
    }
    let field = parse_field(&config.field, caps).map_err(at("field"))?;
    let ctx = Ctx { field: field.clone(), format: config.format };
    match config.command {
        Command::Eigengroup => cmd_eigengroup(&ctx, &monic_arg(&field, &config.f, "f")?),
        Command::Eigenform => cmd_eigenform(&ctx, &monic_arg(&field, &config.f, "f")?),
        Command::Centre => cmd_centre(&ctx, &monic_arg(&field, &config.f, "f")?),
        Command::AutGroup => cmd_aut_group(&ctx, &monic_arg(&field, &config.f, "f")?, config),
        Command::Isomorphic => {
            cmd_isomorphic(&ctx, &monic_arg(&field, &config.f, "f")?, &monic_arg(&field, &config.g, "g")?)
        }
        Command::SimpleModule => cmd_simple_module(&ctx, &monic_arg(&field, &config.f, "f")?, config),
        Command::Spectrum => cmd_spectrum(&ctx, &monic_arg(&field, &config.f, "f")?, config.degree_bound),
        Command::InverseGroup => cmd_inverse(&ctx, config),
        Command::Oracle => cmd_oracle(&ctx, &monic_arg(&field, &config.f, "f")?),
    }
}

fn render(ctx: &Ctx, value: Value, text: String) -> String {
    match ctx.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => text,
    }
}

fn group_json(g: &Eigengroup, fmt: &dyn Fn(Fq) -> String) -> Value {
    let order = g.order().map_or(json!("infinite"), |o| json!(o));
    match &g.desc {
        EigengroupDesc::Full => json!({"kind": "full", "order": order}),
        EigengroupDesc::Torus { nu } => json!({"kind": "torus", "nu": fmt(*nu), "order": order}),
        EigengroupDesc::Finite { v, n, lambda_n, nu } => json!({
            "kind": "finite",
            "n": n,
            "lambda_n": fmt(*lambda_n),
            "nu": fmt(*nu),
            "V_basis": v.space.basis().into_iter().map(fmt).collect::<Vec<_>>(),
            "e": v.e,
            "order": order,
        }),
    }
}

fn aut_json(a: &AffineAut, fmt: &dyn Fn(Fq) -> String) -> Value {
    json!({"lambda": fmt(a.lambda), "mu": fmt(a.mu)})
}

fn aut_text(a: &AffineAut, fmt: &dyn Fn(Fq) -> String) -> String {
    format!("x ↦ {}·x + {}", fmt(a.lambda), fmt(a.mu))
}

fn cmd_eigengroup(ctx: &Ctx, f: &Poly) -> Res<String> {
    let res = eigengroup(f)?;
    let tower = res.split.tower.clone();
    let l = res.split.ext().clone();
    let base_fmt = |a: Fq| ctx.elt(tower.restrict(a).expect("element of K"));
    let ext_fmt = |a: Fq| l.format_short(a);
    let gens = res.generators_in_base()?;
    let mut value = group_json(&res.over_base, &base_fmt);
    let obj = value.as_object_mut().expect("object");
    obj.insert("field".into(), json!(ctx.field.spec()));
    obj.insert("f".into(), json!(f.to_string()));
    obj.insert("generators".into(), json!(gens.iter().map(|a| aut_json(a, &|x| ctx.elt(x))).collect::<Vec<_>>()));
    let mut closure = group_json(&res.closed, &ext_fmt);
    closure.as_object_mut().expect("object").insert("field".into(), json!(l.spec()));
    obj.insert("closure".into(), closure);
    let mut text = format!("G_f(K) = {}\n", res.over_base.describe(&base_fmt));
    for g in &gens {
        let _ = writeln!(text, "  generator {}", aut_text(g, &|x| ctx.elt(x)));
    }
    let _ = writeln!(text, "G_f(closure) = {} over {}", res.closed.describe(&ext_fmt), l.spec());
    Ok(render(ctx, value, text))
}

fn form_json(form: &Eigenform, fmt: &dyn Fn(Fq) -> String) -> Value {
    match form {
        Eigenform::A10 { v, i, nu, n, g } => json!({
            "case": "A10", "i": i, "nu": fmt(*nu), "n": n, "g": g.format_with("t"),
            "V_basis": v.space.basis().into_iter().map(fmt).collect::<Vec<_>>(),
        }),
        Eigenform::A11 { i, nu, n, g } => json!({"case": "A11", "i": i, "nu": fmt(*nu), "n": n, "g": g.format_with("t")}),
        Eigenform::B11 { v, s, g } => json!({
            "case": "B11", "s": s, "g": g.format_with("t"),
            "V_basis": v.space.basis().into_iter().map(fmt).collect::<Vec<_>>(),
        }),
        Eigenform::SingleRoot { nu, d } => json!({"case": "single_root", "nu": fmt(*nu), "d": d}),
        Eigenform::NoForm => json!({"case": "none"}),
    }
}

fn cmd_eigenform(ctx: &Ctx, f: &Poly) -> Res<String> {
    let res = eigengroup(f)?;
    let l = res.split.ext().clone();
    let fmt = |a: Fq| l.format_short(a);
    let mut value = form_json(&res.form, &fmt);
    let expanded = res.form.expand(&l);
    let law = res.form.eigenvalue_law(&l)?;
    let obj = value.as_object_mut().expect("object");
    obj.insert("field".into(), json!(l.spec()));
    obj.insert("f".into(), json!(f.to_string()));
    if let Some(e) = &expanded {
        obj.insert("expands_to_f".into(), json!(*e == res.split.poly));
    }
    if let Some((sigma, i)) = &law {
        obj.insert("generator".into(), aut_json(sigma, &fmt));
        obj.insert("eigenvalue_exponent".into(), json!(i));
    }
    let mut text = format!("case {} over {}\n", res.form.case_name(), l.spec());
    for (k, v) in value.as_object().expect("object") {
        if k != "case" && k != "field" {
            let _ = writeln!(text, "  {k} = {}", v.to_string().trim_matches('"'));
        }
    }
    Ok(render(ctx, value, text))
}

fn cmd_centre(ctx: &Ctx, f: &Poly) -> Res<String> {
    let alg = OreAlgebra::new(f.clone())?;
    let gens = alg.centre_generators()?;
    let p = alg.characteristic();
    let lhs = alg.delta_power(&Poly::x(&ctx.field), p);
    let rhs = f * &gens.c;
    if lhs != rhs {
        return Err(Error::internal("δ^p(x) ≠ (δ^(p−2)(f))′·f").into());
    }
    let value = json!({
        "field": ctx.field.spec(),
        "f": f.to_string(),
        "z1": gens.z1.to_string(),
        "z2": gens.z2.to_string(),
        "c": gens.c.to_string(),
        "delta_p_of_x": lhs.to_string(),
    });
    let text = format!("z1 = {}\nz2 = {}\nc(x) = {}\nδ^p(x) = {}\n", gens.z1, gens.z2, gens.c, lhs);
    Ok(render(ctx, value, text))
}

fn cmd_aut_group(ctx: &Ctx, f: &Poly, config: &JobConfig) -> Res<String> {
    let group = aut_group(f)?;
    let alg = OreAlgebra::new(f.clone())?;
    let d = f.deg();
    let k = &ctx.field;
    let gens = group.generators(config.degree_bound as usize);
    if let Some(bad) = gens.iter().find(|s| !s.is_automorphism(&alg)) {
        return Err(Error::internal(format!("generator σ_({},{},{}) is not a homomorphism", ctx.elt(bad.lambda), ctx.elt(bad.mu), bad.shift)).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples = 16;
    let all: Vec<AffineAut> = (0..k.size()).flat_map(|a| (0..k.size()).map(move |b| (a, b))).filter(|&(a, _)| a != 0).map(|(a, b)| AffineAut { lambda: k.from_index(a), mu: k.from_index(b) }).collect();
    for _ in 0..samples {
        let coeffs: Vec<Fq> = (0..=config.degree_bound).map(|_| k.from_index(rng.gen_range(0..k.size()))).collect();
        let shift = Poly::from_coeffs(k, coeffs);
        let a = all[rng.gen_range(0..all.len())];
        let sigma = LambdaAut { lambda: a.lambda, mu: a.mu, shift };
        let member = group.eigen_elements.contains(&a);
        if sigma.is_automorphism(&alg) != member {
            return Err(Error::internal(format!("sampled automorphism test disagrees with G_f membership for ({}, {})", ctx.elt(a.lambda), ctx.elt(a.mu))).into());
        }
        let inv = sigma.inverse(d);
        if member && sigma.compose(&inv, d) != LambdaAut::identity(k) {
            return Err(Error::internal("σ ∘ σ^(-1) ≠ id").into());
        }
    }
    let fmt = |a: Fq| ctx.elt(a);
    let mut value = group_json(&group.eigen, &|a| ctx.field.format_short(a));
    // The descriptor is over the splitting field; report the K-coordinates instead.
    let obj = value.as_object_mut().expect("object");
    obj.remove("lambda_n");
    obj.remove("nu");
    obj.remove("V_basis");
    obj.insert("field".into(), json!(k.spec()));
    obj.insert("f".into(), json!(f.to_string()));
    obj.insert("shift_part".into(), json!("K[x]"));
    obj.insert("eigengroup_elements".into(), json!(group.eigen_elements.iter().map(|a| aut_json(a, &fmt)).collect::<Vec<_>>()));
    obj.insert(
        "generators".into(),
        json!(gens.iter().map(|s| json!({"lambda": fmt(s.lambda), "mu": fmt(s.mu), "p": s.shift.to_string()})).collect::<Vec<_>>()),
    );
    obj.insert("degree_bound".into(), json!(config.degree_bound));
    obj.insert("sampled_checks".into(), json!(samples));
    let mut text = format!("Aut(Λ(f)) = S(K) ⋊ G_f(K), |G_f(K)| = {}\n", group.eigen_elements.len());
    for s in &gens {
        let _ = writeln!(text, "  σ: x ↦ {}·x + {}, y ↦ {}·y + ({})", fmt(s.lambda), fmt(s.mu), fmt(k.pow(s.lambda, d as u64 - 1)), s.shift);
    }
    Ok(render(ctx, value, text))
}

fn cmd_isomorphic(ctx: &Ctx, f: &Poly, g: &Poly) -> Res<String> {
    let w = are_isomorphic(f, g)?;
    let fmt = |a: Fq| ctx.elt(a);
    let (value, text) = match &w {
        Some(w) => (
            json!({"isomorphic": true, "lambda": fmt(w.lambda), "alpha": fmt(w.alpha), "beta": fmt(w.beta), "y_scale": fmt(w.y_scale)}),
            format!(
                "isomorphic: g(x) = {}·f({}·x + {}); Λ(f) → Λ(g): x ↦ {}·x + {}, y ↦ {}·y\n",
                fmt(w.lambda), fmt(w.alpha), fmt(w.beta), fmt(w.alpha), fmt(w.beta), fmt(w.y_scale)
            ),
        ),
        None => (json!({"isomorphic": false}), "not isomorphic\n".to_string()),
    };
    Ok(render(ctx, value, text))
}

fn matrix_json(m: &Matrix) -> Value {
    let k = m.field();
    json!(m.to_rows().iter().map(|r| r.iter().map(|&a| k.format_short(a)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn matrix_text(m: &Matrix) -> String {
    let k = m.field();
    m.to_rows()
        .iter()
        .map(|r| format!("  [{}]", r.iter().map(|&a| k.format_short(a)).collect::<Vec<_>>().join(" ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_simple_module(ctx: &Ctx, f: &Poly, config: &JobConfig) -> Res<String> {
    let k = &ctx.field;
    let module = if let Some(factor) = &config.p_factor {
        let factor = Poly::parse(k, factor).map_err(at("p-factor"))?;
        let alg = OreAlgebra::new(f.clone())?;
        let q = alg.parse(required(&config.q, "q")?).map_err(at("q"))?;
        simple_module_on_f(f, &factor, &q)?
    } else {
        let xi = parse_element(k, required(&config.xi, "xi")?, "xi")?;
        let rho = parse_element(k, required(&config.rho, "rho")?, "rho")?;
        simple_module_off_f(f, xi, rho)?
    };
    let irr = module.irreducibility();
    let e = module.field.clone();
    let mut value = json!({
        "field": e.spec(),
        "f": f.to_string(),
        "dim": module.dim(),
        "X": matrix_json(&module.x),
        "Y": matrix_json(&module.y),
        "relation_holds": true,
        "word_span_dim": irr.word_span,
        "commutant_dim": irr.commutant,
        "full_matrix_span": irr.full_span,
        "density_holds": irr.density_holds(),
        "simple": irr.simple,
    });
    let obj = value.as_object_mut().expect("object");
    match &module.kind {
        ModuleKind::OffF { xi, rho, root } => {
            obj.insert("kind".into(), json!("off_f"));
            obj.insert("xi".into(), json!(e.format_short(*xi)));
            obj.insert("rho".into(), json!(e.format_short(*rho)));
            obj.insert("xi_root".into(), json!(e.format_short(*root)));
            obj.insert("rho_convention".into(), json!("z2 = y^p - c(x)*y acts by rho"));
        }
        ModuleKind::OnF { factor, q, theta } => {
            obj.insert("kind".into(), json!("on_f"));
            obj.insert("p_factor".into(), json!(factor.to_string()));
            obj.insert("q".into(), json!(q.format_with("y")));
            obj.insert("theta".into(), json!(e.format_short(*theta)));
        }
    }
    let text = format!(
        "{} module of dimension {} over {}\nX =\n{}\nY =\n{}\nword span {}, commutant {}, simple: {}\n",
        if matches!(module.kind, ModuleKind::OffF { .. }) { "off-f" } else { "on-f" },
        module.dim(),
        e.spec(),
        matrix_text(&module.x),
        matrix_text(&module.y),
        irr.word_span,
        irr.commutant,
        match irr.simple {
            Some(true) => "yes",
            Some(false) => "no",
            None => "not checked",
        }
    );
    Ok(render(ctx, value, text))
}

fn cmd_spectrum(ctx: &Ctx, f: &Poly, bound: u32) -> Res<String> {
    let s = spectrum(f, bound)?;
    let points: Vec<Value> = s
        .max_off_f
        .iter()
        .map(|pt| json!({"degree": pt.degree, "field": pt.field.spec(), "xi": pt.field.format_short(pt.xi), "rho": pt.field.format_short(pt.rho)}))
        .collect();
    let value = json!({
        "field": ctx.field.spec(),
        "f": f.to_string(),
        "min_primes": s.min_primes.iter().map(|m| json!({"poly": m.poly.to_string(), "mult": m.mult})).collect::<Vec<_>>(),
        "spec_c": s.spec_c,
        "ht1": s.ht1.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "max_off_f": points,
        "degree_bound": bound,
        "truncated": s.truncated,
        "rho_convention": "z2 = y^p - c(x)*y",
    });
    let mut text = String::from("minimal primes:\n");
    for m in &s.min_primes {
        let _ = writeln!(text, "  ({})^{}", m.poly, m.mult);
    }
    text.push_str("Spec_c:\n");
    for e in &s.spec_c {
        let _ = writeln!(text, "  {e}");
    }
    let _ = writeln!(text, "central points off V(f^p) up to degree {bound}: {}{}", s.max_off_f.len(), if s.truncated { " (truncated)" } else { "" });
    Ok(render(ctx, value, text))
}

fn parse_basis(k: &FieldRef, text: &str) -> Res<FpSpace> {
    let elems = text.split(';').map(|t| parse_element(k, t, "basis")).collect::<Res<Vec<_>>>()?;
    Ok(FpSpace::span(k, &elems))
}

fn cmd_inverse(ctx: &Ctx, config: &JobConfig) -> Res<String> {
    let k = &ctx.field;
    let shape = config.shape.ok_or_else(|| missing("shape"))?;
    let nu = match &config.nu {
        Some(t) => parse_element(k, t, "nu")?,
        None => k.zero(),
    };
    let n = || config.n.ok_or_else(|| missing("n"));
    let v = || parse_basis(k, required(&config.basis, "basis")?);
    let spec = match shape {
        Shape::Trivial => SubgroupSpec::Trivial,
        Shape::Cyclic => SubgroupSpec::Cyclic { n: n()?, nu },
        Shape::ShiftOffImage => SubgroupSpec::ShiftOffImage { v: v()?, nu },
        Shape::ShiftDoubleCoset => SubgroupSpec::ShiftDoubleCoset { v: v()?, nu },
        Shape::ShiftCyclic => SubgroupSpec::ShiftCyclic { v: v()?, n: n()?, nu },
        Shape::Torus => SubgroupSpec::Torus { nu },
        Shape::Full => SubgroupSpec::Full,
    };
    let f = inverse_eigengroup(&spec, k)?;
    let target = spec.to_group(k)?;
    let expected = group_elements(&target)?;
    let got = eigengroup(&f)?.elements_in_base()?;
    if got != expected {
        return Err(Error::internal(format!("the eigengroup of {f} differs from the requested subgroup")).into());
    }
    let fmt = |a: Fq| ctx.elt(a);
    let mut value = group_json(&target, &fmt);
    let obj = value.as_object_mut().expect("object");
    obj.insert("field".into(), json!(k.spec()));
    obj.insert("shape".into(), json!(value_name(shape)));
    obj.insert("f".into(), json!(f.to_string()));
    obj.insert("verified".into(), json!(true));
    let text = format!("f_H = {f}\nH = {}\n", target.describe(&fmt));
    Ok(render(ctx, value, text))
}

fn cmd_oracle(ctx: &Ctx, f: &Poly) -> Res<String> {
    let structured = eigengroup(f)?.elements_in_base()?;
    let brute = eigengroup_bruteforce(f)?;
    if structured != brute {
        return Err(Error::internal(format!(
            "structured eigengroup of {f} has {} elements, exhaustive search finds {}",
            structured.len(),
            brute.len()
        ))
        .into());
    }
    let fmt = |a: Fq| ctx.elt(a);
    let value = json!({
        "field": ctx.field.spec(),
        "f": f.to_string(),
        "agree": true,
        "order": brute.len(),
        "elements": brute.iter().map(|a| aut_json(a, &fmt)).collect::<Vec<_>>(),
    });
    let mut text = format!("structured and exhaustive eigengroups agree, order {}\n", brute.len());
    for a in &brute {
        let _ = writeln!(text, "  {}", aut_text(a, &fmt));
    }
    Ok(render(ctx, value, text))
}
