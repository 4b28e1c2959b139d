use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cliffkit::classify::{check_consistency, classify, even_subalgebra, verify_periodicity, verify_witness};
use cliffkit::dirac::{self, DiracSpinor};
use cliffkit::lipschitz::{self, Membership, OrthogonalImage};
use cliffkit::majorana::{self, FieldKind};
use cliffkit::matrep::{self, CMat};
use cliffkit::scalar::{round15, Scalar};
use cliffkit::text::{format_multivector, parse_multivector};
use cliffkit::{Multivector, Rational, Signature};
use num_complex::Complex64;

mod render;

const DEFAULT_TOL: f64 = 1e-12;

#[derive(Parser)]
#[command(name = "cliffkit", version, about = "Clifford algebras, gamma matrices and spinors")]
struct Cli {
    /// Emit canonical JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify Cl(p,q) as a matrix algebra.
    ///
    /// Equations: ω = e1 e2 ... en, ω² = (-1)^{n(n-1)/2 + q};
    /// Cl(p,q) ≅ K[2^k] or K[2^k] ⊕ K[2^k] by (p - q) mod 8.
    Classify { signature: String },
    /// Identify the even subalgebra and check its generators.
    ///
    /// Equation: Cl⁰(p,q) ≅ Cl(p,q-1) for q > 0, else Cl(q,p-1),
    /// generated by f_i = e_n e_i with f_i f_j + f_j f_i = 2η'_ij.
    Even { signature: String },
    /// Check the periodicity relations at a base signature.
    ///
    /// Equations: Cl(p+1,q+1) ≅ Cl(p,q)[2], Cl(p+4,q) ≅ Cl(p,q+4),
    /// Cl(p+8,q) ≅ Cl(p,q)[16].
    Periodicity {
        signature: String,
        /// Largest generator count to evaluate.
        #[arg(long, default_value_t = 12)]
        cap: u32,
    },
    /// Test Pin/Spin membership and print the vector representation.
    ///
    /// Equations: L_x(v) = α(x) v x⁻¹ must lie in V; N(x) = x̄x = ±1;
    /// Spin additionally requires x even.
    PinCheck { signature: String, multivector: String },
    /// Build a rotor and its orthogonal image.
    ///
    /// Equations: Λ = exp(B) for a bivector B; in Cl(3,0),
    /// U = cos(θ/2) - ω (n·σ) sin(θ/2) rotates by θ about n.
    Rotor(RotorArgs),
    /// Print gamma matrices.
    ///
    /// Equations: γ_a γ_b + γ_b γ_a = 2η_ab; γ_{2m+1} = σ3 ⊗ 1 ⊗ ... ⊗ 1
    /// and γ_a^{(2m+2)} = σ1 ⊗ γ_a^{(2m)}, γ_{2m+2} = σ2 ⊗ 1.
    Gamma {
        dimension: u32,
        #[arg(long)]
        lorentzian: bool,
        #[arg(long, value_enum, default_value_t = Basis::Chiral)]
        basis: Basis,
    },
    /// Print the charge conjugation matrix C.
    ///
    /// Equations: -γ_aᵗ C = C γ_a; C̄C = ±1; for odd D the primed
    /// matrix is C' = i^{5-m} ω C.
    Conjugation {
        dimension: u32,
        #[arg(long)]
        primed: bool,
    },
    /// KO-dimension signs of the real structure J.
    ///
    /// Equations: J = KC (J = KB Lorentzian), J² = C̄C,
    /// J γ_{2m+1} = ε γ_{2m+1} J; Euclidean J² = (-1)^{m(m+1)/2}, ε = (-1)^m.
    Ko {
        dimension: u32,
        #[arg(long)]
        lorentzian: bool,
    },
    /// Existence of Majorana and Majorana-Weyl spinors for Cl(p,q).
    ///
    /// Equation: Majorana iff p - q ≡ 0, 1, 2 (mod 8); Majorana-Weyl iff
    /// p - q ≡ 0 (mod 8).
    MajoranaClass { signature: String },
    /// Plane-wave Dirac spinors and spin sums.
    ///
    /// Equations: u_L = √(p̃) χ, u_R = -i √(p̰) χ; (m + i p̸) u = 0;
    /// Σ u ũ = m - i p̸, Σ v ṽ = -m - i p̸.
    Dirac {
        #[arg(long)]
        mass: f64,
        /// Spatial momentum "px,py,pz".
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_enum, default_value_t = Basis::Chiral)]
        basis: Basis,
    },
    /// Mass term and U(1) current for commuting and anticommuting fields.
    ///
    /// Equations: ψᵗ C ψ with C antisymmetric vanishes for commuting ψ;
    /// ψᵗ C γ^μ ψ with C γ^μ symmetric vanishes for anticommuting ψ.
    MajoranaAudit {
        /// Current index μ.
        #[arg(long, default_value_t = 0)]
        mu: usize,
    },
    /// Eigenvalues of the seesaw block.
    ///
    /// Equations: [[0, yH], [yH, M]] has λ± = (M ± √(M² + 4(yH)²))/2;
    /// m_light ≈ (yH)²/M, M_heavy ≈ M.
    Seesaw {
        #[arg(long, allow_hyphen_values = true)]
        yh: f64,
        #[arg(long)]
        m: f64,
    },
    /// Exact transport of massless 1+1 dimensional Weyl fields.
    ///
    /// Equations: (∂_t - ∂_x) ψ_L = 0, (∂_t + ∂_x) ψ_R = 0, so
    /// ψ_L(t,x) = ψ_L(0,x+t) and ψ_R(t,x) = ψ_R(0,x-t).
    Weyl1d(WeylArgs),
}

#[derive(Args)]
struct RotorArgs {
    /// Signature "p,q"; defaults to 3,0 with --axis.
    signature: Option<String>,
    /// Bivector B of exp(B).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["axis", "angle"])]
    bivector: Option<String>,
    /// Rotation axis "nx,ny,nz" in Cl(3,0).
    #[arg(long, allow_hyphen_values = true, requires = "angle")]
    axis: Option<String>,
    /// Rotation angle θ in radians.
    #[arg(long, allow_hyphen_values = true)]
    angle: Option<f64>,
}

#[derive(Args)]
struct WeylArgs {
    /// Evolution time.
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Grid "x0,x1,n".
    #[arg(long, allow_hyphen_values = true, default_value = "-5,5,11")]
    grid: String,
    /// Centers of the Gaussian profiles of ψ_L and ψ_R.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    left_center: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    right_center: f64,
    #[arg(long, default_value_t = 1.0)]
    width: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Chiral,
    Dirac,
    Majorana,
}

/// Outcome of a subcommand: payload plus whether every invariant held.
struct Report {
    payload: Map<String, Value>,
    ok: bool,
    diagnostics: Vec<String>,
}

impl Report {
    fn new(payload: Value) -> Self {
        let Value::Object(payload) = payload else {
            unreachable!("payloads are objects")
        };
        Report {
            payload,
            ok: true,
            diagnostics: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, message: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.diagnostics.push(message());
        }
    }
}

/// Input errors, reported with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<Report, Usage>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let tol = match tolerance() {
        Ok(t) => t,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, tol) {
        Ok(mut report) => {
            report.payload.insert("schema".into(), json!("1"));
            if cli.json {
                println!("{}", Value::Object(report.payload));
            } else {
                print!("{}", render::table(&report.payload));
            }
            for d in &report.diagnostics {
                eprintln!("falsified: {d}");
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn tolerance() -> Result<f64, Usage> {
    match std::env::var("CLIFFKIT_TOL") {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(Usage(format!("CLIFFKIT_TOL must be a non-negative number, got {s:?}"))),
        },
    }
}

fn run(command: Command, tol: f64) -> Outcome {
    match command {
        Command::Classify { signature } => cmd_classify(&signature),
        Command::Even { signature } => cmd_even(&signature, tol),
        Command::Periodicity { signature, cap } => cmd_periodicity(&signature, cap),
        Command::PinCheck { signature, multivector } => cmd_pin_check(&signature, &multivector, tol),
        Command::Rotor(args) => cmd_rotor(args, tol),
        Command::Gamma { dimension, lorentzian, basis } => cmd_gamma(dimension, lorentzian, basis, tol),
        Command::Conjugation { dimension, primed } => cmd_conjugation(dimension, primed, tol),
        Command::Ko { dimension, lorentzian } => cmd_ko(dimension, lorentzian),
        Command::MajoranaClass { signature } => cmd_majorana_class(&signature),
        Command::Dirac { mass, p, basis } => cmd_dirac(mass, &p, basis, tol),
        Command::MajoranaAudit { mu } => cmd_majorana_audit(mu),
        Command::Seesaw { yh, m } => cmd_seesaw(yh, m, tol),
        Command::Weyl1d(args) => cmd_weyl(args, tol),
    }
}

// ---- value helpers ----

/// A float at 15 significant digits; integral values print without a point.
fn num(x: f64) -> Value {
    let r = round15(x);
    if r.fract() == 0.0 && r.abs() < 1e15 {
        json!(r as i64)
    } else {
        json!(r)
    }
}

fn complex(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

fn matrix(m: &CMat) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| complex(m[(i, j)])).collect()))
            .collect(),
    )
}

fn spinor(s: &DiracSpinor) -> Value {
    Value::Array(s.0.iter().map(|&z| complex(z)).collect())
}

fn parse_pq(text: &str) -> Result<(u32, u32), Usage> {
    let bad = || Usage(format!("malformed signature {text:?}, expected \"p,q\""));
    let (p, q) = text.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn parse_signature(text: &str) -> Result<Signature, Usage> {
    let (p, q) = parse_pq(text)?;
    Ok(Signature::new(p, q)?)
}

fn parse_floats<const N: usize>(text: &str, what: &str) -> Result<[f64; N], Usage> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Usage(format!("malformed {what} {text:?}")))?;
    parts
        .try_into()
        .map_err(|_| Usage(format!("{what} needs {N} comma-separated numbers, got {text:?}")))
}

fn exact_matrix<S: Scalar>(rows: &[Vec<S>]) -> Value {
    if S::EXACT {
        json!(rows
            .iter()
            .map(|r| r.iter().map(|x| x.format_coeff()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    } else {
        json!(rows
            .iter()
            .map(|r| r.iter().map(|x| num(x.to_complex64().re)).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

fn scalar_value<S: Scalar>(x: &S) -> Value {
    if S::EXACT {
        json!(x.format_coeff())
    } else {
        num(x.to_complex64().re)
    }
}

// ---- subcommands ----

fn cmd_classify(text: &str) -> Outcome {
    let (p, q) = parse_pq(text)?;
    let r = classify(p, q);
    let mut report = Report::new(json!({
        "ring": r.base_ring.symbol(),
        "size": r.matrix_size,
        "summands": r.summands,
        "omega_sq": r.omega_sq,
        "dim": r.total_real_dim,
    }));
    if let Ok(sig) = Signature::new(p, q) {
        let c = check_consistency(sig);
        report.require(c.is_consistent(), || format!("{sig}: {}", c.mismatches.join("; ")));
    }
    Ok(report)
}

fn cmd_even(text: &str, tol: f64) -> Outcome {
    let sig = parse_signature(text)?;
    let sub = even_subalgebra::<Rational>(sig)?;
    let failures = verify_witness(&sub, tol);
    let mut report = Report::new(json!({
        "signature": [sig.p(), sig.q()],
        "target": [sub.target.p(), sub.target.q()],
        "witness": sub.witness.iter().map(format_multivector).collect::<Vec<_>>(),
        "relations_hold": failures.is_empty(),
    }));
    for f in failures {
        report.require(false, || f);
    }
    Ok(report)
}

fn cmd_periodicity(text: &str, cap: u32) -> Outcome {
    let (p, q) = parse_pq(text)?;
    let rep = verify_periodicity(p, q, cap);
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "relation": c.relation,
                "lhs": [c.lhs.0, c.lhs.1],
                "rhs": [c.rhs.0, c.rhs.1],
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    let mut report = Report::new(json!({
        "base": [p, q],
        "checks": checks,
        "skipped": rep.skipped(),
    }));
    for c in rep.checks.iter().filter(|c| c.passed == Some(false)) {
        report.require(false, || format!("{}: {}", c.relation, c.detail));
    }
    Ok(report)
}

fn membership_payload<S: Scalar>(x: &Multivector<S>, tol: f64) -> Report {
    let (v, image) = lipschitz::group_membership_within(x, tol);
    let mut report = Report::new(json!({
        "signature": [x.signature().p(), x.signature().q()],
        "element": format_multivector(x),
        "membership": v.membership.to_string(),
        "in_lipschitz": v.in_lipschitz,
        "parity": v.parity.to_string(),
        "norm": v.norm_value.as_ref().map(scalar_value),
        "L": image.as_ref().map(|l| exact_matrix(&l.matrix)),
        "det": image.as_ref().map(|l| scalar_value(&l.det)),
        "diagnostics": v.diagnostics,
    }));
    report.require(matches!(v.membership, Membership::Pin | Membership::Spin), || {
        format!("{} is not in Pin ({})", format_multivector(x), v.membership)
    });
    report
}

fn cmd_pin_check(sig_text: &str, mv_text: &str, tol: f64) -> Outcome {
    let sig = parse_signature(sig_text)?;
    if let Ok(x) = parse_multivector::<Rational>(sig, mv_text) {
        return Ok(membership_payload(&x, tol));
    }
    let x = parse_multivector::<f64>(sig, mv_text)?;
    Ok(membership_payload(&x, tol))
}

fn image_payload(u: &Multivector<f64>, l: &OrthogonalImage<f64>, tol: f64) -> Report {
    let mut report = Report::new(json!({
        "signature": [u.signature().p(), u.signature().q()],
        "rotor": format_multivector(u),
        "L": exact_matrix(&l.matrix),
        "det": num(l.det),
        "preserves_metric": l.preserves_metric(tol.max(1e-15) * 1e3),
    }));
    report.require(l.preserves_metric(tol.max(1e-15) * 1e3), || "image is not an isometry".into());
    report
}

fn cmd_rotor(args: RotorArgs, tol: f64) -> Outcome {
    if let Some(axis) = args.axis {
        if args.signature.as_deref().is_some_and(|s| parse_pq(s).ok() != Some((3, 0))) {
            return Err(Usage("--axis needs signature 3,0".into()));
        }
        let axis = parse_floats::<3>(&axis, "axis")?;
        let theta = args.angle.expect("clap requires --angle with --axis");
        let (u, l) = lipschitz::rotor_from_axis_angle(axis, theta)?;
        return Ok(image_payload(&u, &l, tol));
    }
    let (Some(sig_text), Some(b)) = (args.signature, args.bivector) else {
        return Err(Usage("rotor needs either p,q --bivector B or --axis n --angle θ".into()));
    };
    let sig = parse_signature(&sig_text)?;
    let b = parse_multivector::<f64>(sig, &b)?;
    if b.grades().iter().any(|&g| g != 2) {
        return Err(Usage(format!("{} is not a bivector", format_multivector(&b))));
    }
    let u = lipschitz::rotor_exp(&b)?;
    let (v, image) = lipschitz::group_membership_within(&u, tol.max(1e-15) * 1e3);
    let Some(l) = image else {
        let mut report = Report::new(json!({
            "signature": [sig.p(), sig.q()],
            "rotor": format_multivector(&u),
            "diagnostics": v.diagnostics,
        }));
        report.require(false, || "exp(B) is not in the Lipschitz group".into());
        return Ok(report);
    };
    let mut report = image_payload(&u, &l, tol);
    report.payload.insert("membership".into(), json!(v.membership.to_string()));
    report.require(v.membership == Membership::Spin, || format!("exp(B) is {}, not Spin", v.membership));
    Ok(report)
}

fn cmd_gamma(d: u32, lorentzian: bool, basis: Basis, tol: f64) -> Outcome {
    let rep = matrep::gamma_matrices(d, lorentzian)?;
    let gammas = match basis {
        Basis::Chiral => rep.gammas.clone(),
        _ if d != 4 || !lorentzian => {
            return Err(Usage("--basis dirac|majorana needs D = 4 with --lorentzian".into()))
        }
        Basis::Dirac => dirac::dirac_basis(&rep)?.gammas,
        Basis::Majorana => dirac::majorana_basis(&rep)?.gammas,
    };
    let residual = clifford_residual(&gammas, &rep.metric);
    let mut report = Report::new(json!({
        "dimension": d,
        "lorentzian": lorentzian,
        "basis": basis_name(basis),
        "metric": rep.metric,
        "gammas": gammas.iter().map(matrix).collect::<Vec<_>>(),
        "clifford_residual": num(residual),
    }));
    report.require(residual <= tol, || format!("Clifford residual {residual:e}"));
    Ok(report)
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Chiral => "chiral",
        Basis::Dirac => "dirac",
        Basis::Majorana => "majorana",
    }
}

fn clifford_residual(gammas: &[CMat], metric: &[i8]) -> f64 {
    let n = gammas[0].nrows();
    let mut worst: f64 = 0.0;
    for (a, ga) in gammas.iter().enumerate() {
        for (b, gb) in gammas.iter().enumerate() {
            let eta = if a == b { 2.0 * metric[a] as f64 } else { 0.0 };
            let r = ga * gb + gb * ga - matrep::identity(n) * Complex64::new(eta, 0.0);
            worst = worst.max(matrep::max_abs(&r));
        }
    }
    worst
}

/// `s` with `a = s·b`, if `s = ±1` fits within `tol`.
fn relative_sign(a: &CMat, b: &CMat, tol: f64) -> Option<i8> {
    if matrep::max_abs_diff(a, b) <= tol {
        Some(1)
    } else if matrep::max_abs(&(a + b)) <= tol {
        Some(-1)
    } else {
        None
    }
}

fn cmd_conjugation(d: u32, primed: bool, tol: f64) -> Outcome {
    let c = matrep::charge_conjugation(d, primed)?;
    let gammas = if d.is_multiple_of(2) {
        matrep::euclidean_gammas(d)?
    } else {
        matrep::embedded_odd_gammas(d)?
    };
    let n = c.nrows();
    let cbar_c = relative_sign(&(c.conjugate() * &c), &matrep::identity(n), tol);
    let transpose = relative_sign(&c.transpose(), &c, tol);
    let signs: Vec<Option<i8>> = gammas
        .iter()
        .map(|g| relative_sign(&(g.transpose() * &c), &(&c * g), tol))
        .collect();
    let gamma_sign = signs.iter().all(|s| s.is_some() && *s == signs[0]).then(|| signs[0]).flatten();
    let mut report = Report::new(json!({
        "dimension": d,
        "primed": primed,
        "size": n,
        "C": matrix(&c),
        "CbarC": cbar_c,
        "transpose_sign": transpose,
        "gamma_transpose_sign": gamma_sign,
    }));
    if d % 2 == 1 {
        let irreducible = matrep::irreducible_charge_conjugation(d).is_ok();
        report.payload.insert("irreducible_exists".into(), json!(irreducible));
    }
    report.require(cbar_c.is_some(), || "C̄C is not ±1".into());
    report.require(transpose.is_some(), || "C is neither symmetric nor antisymmetric".into());
    report.require(gamma_sign.is_some(), || "γᵗC = ±Cγ fails".into());
    if !primed {
        report.require(gamma_sign == Some(-1), || "-γᵗC = Cγ fails".into());
    }
    Ok(report)
}

fn cmd_ko(d: u32, lorentzian: bool) -> Outcome {
    let ko = matrep::ko_signs(d, lorentzian)?;
    let mut report = Report::new(json!({
        "J2": ko.j_squared,
        "eps": ko.epsilon,
        "ko_dim": ko.ko_dim,
    }));
    let (j, e) = matrep::ko_signs_formula(d / 2);
    let flip = if lorentzian { -1 } else { 1 };
    report.require(ko.j_squared == flip * j && ko.epsilon == flip * e, || {
        format!("computed (J², ε) = ({}, {}) disagrees with the closed form", ko.j_squared, ko.epsilon)
    });
    Ok(report)
}

fn cmd_majorana_class(text: &str) -> Outcome {
    let (p, q) = parse_pq(text)?;
    let c = matrep::majorana_class(p, q);
    Ok(Report::new(json!({
        "signature": [p, q],
        "kind": c.kind.to_string(),
        "weyl": c.weyl.to_string(),
        "majorana_dim": c.majorana_dim,
        "majorana_weyl_dim": c.majorana_weyl_dim,
    })))
}

fn cmd_dirac(mass: f64, p_text: &str, basis: Basis, tol: f64) -> Outcome {
    let pvec = parse_floats::<3>(p_text, "momentum")?;
    let waves = dirac::plane_wave_spinors(mass, pvec)?;
    let p = waves.momentum;
    let rep = dirac::chiral_rep();
    let s = match basis {
        Basis::Chiral => matrep::identity(4),
        Basis::Dirac => dirac::dirac_basis(&rep)?.t,
        Basis::Majorana => dirac::majorana_basis(&rep)?.s,
    };
    let u_sum = dirac::spin_sum(&waves.u);
    let v_sum = dirac::spin_sum(&waves.v);
    let (dirac_u, dirac_v) = dirac::dirac_residuals(&waves);
    let residuals = [
        ("dirac_u", dirac_u),
        ("dirac_v", dirac_v),
        ("spin_sum_u", matrep::max_abs_diff(&u_sum, &dirac::expected_u_sum(&p))),
        ("spin_sum_v", matrep::max_abs_diff(&v_sum, &dirac::expected_v_sum(&p))),
    ];
    let moved = |x: &DiracSpinor| DiracSpinor::from_column(&(&s * x.column()));
    let conj = |m: &CMat| &s * m * s.adjoint();
    let mut res = Map::new();
    for (k, v) in residuals {
        res.insert(k.into(), num(v));
    }
    let mut report = Report::new(json!({
        "mass": num(mass),
        "momentum": p.p.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "basis": basis_name(basis),
        "u": waves.u.iter().map(|x| spinor(&moved(x))).collect::<Vec<_>>(),
        "v": waves.v.iter().map(|x| spinor(&moved(x))).collect::<Vec<_>>(),
        "spin_sums": {"u": matrix(&conj(&u_sum)), "v": matrix(&conj(&v_sum))},
        "residuals": res,
    }));
    let scale = p.p[0].max(1.0);
    for (k, v) in residuals {
        report.require(v <= tol * scale, || format!("{k} residual {v:e}"));
    }
    Ok(report)
}

fn cmd_majorana_audit(mu: usize) -> Outcome {
    let mass_c = majorana::mass_term(FieldKind::Commuting);
    let mass_a = majorana::mass_term(FieldKind::Anticommuting);
    let cur_c = majorana::u1_current(FieldKind::Commuting, mu)?;
    let cur_a = majorana::u1_current(FieldKind::Anticommuting, mu)?;
    let mut report = Report::new(json!({
        "mu": mu,
        "mass_commuting": mass_c.to_string(),
        "mass_anticommuting": mass_a.to_string(),
        "current_commuting": cur_c.to_string(),
        "current_anticommuting": cur_a.to_string(),
    }));
    report.require(mass_c.is_zero(), || "commuting mass term is nonzero".into());
    report.require(!mass_a.is_zero(), || "anticommuting mass term vanishes".into());
    report.require(cur_a.is_zero(), || "anticommuting current is nonzero".into());
    Ok(report)
}

fn cmd_seesaw(yh: f64, m: f64, tol: f64) -> Outcome {
    let s = majorana::seesaw_masses(yh, m)?;
    let mut report = Report::new(json!({
        "m_light": num(s.m_light),
        "M_heavy": num(s.m_heavy),
        "lambda_plus": num(s.lambda_plus),
        "lambda_minus": num(s.lambda_minus),
        "approx_light": num(s.approx_light),
        "approx_heavy": num(s.approx_heavy),
        "rel_err_light": num(s.rel_err_light),
        "rel_err_heavy": num(s.rel_err_heavy),
        "hierarchy": s.hierarchy,
    }));
    let scale = m.max(s.lambda_plus.abs()).max(s.lambda_minus.abs());
    let trace = (s.lambda_plus + s.lambda_minus - m).abs() / scale;
    let det = (s.lambda_plus * s.lambda_minus + yh * yh).abs() / (scale * scale);
    report.require(trace <= tol.max(f64::EPSILON), || format!("trace residual {trace:e}"));
    report.require(det <= tol.max(f64::EPSILON), || format!("determinant residual {det:e}"));
    Ok(report)
}

fn cmd_weyl(args: WeylArgs, tol: f64) -> Outcome {
    let [x0, x1, n] = parse_floats::<3>(&args.grid, "grid")?;
    if !(n >= 2.0 && n.fract() == 0.0 && x1 > x0) || args.width <= 0.0 {
        return Err(Usage("grid needs x0 < x1 and an integer n >= 2; width must be positive".into()));
    }
    let n = n as usize;
    let grid: Vec<f64> = (0..n).map(|k| x0 + (x1 - x0) * k as f64 / (n - 1) as f64).collect();
    let w = args.width;
    let profile = |c: f64| move |x: f64| Complex64::new((-((x - c) / w).powi(2)).exp(), 0.0);
    let (lc, rc) = (args.left_center, args.right_center);
    let fields = matrep::weyl_1p1_solver(&grid, profile(lc), profile(rc), args.t);
    let re = |v: &[Complex64]| v.iter().map(|z| z.re).collect::<Vec<_>>();
    let (left, right) = (re(&fields.left), re(&fields.right));
    let shifted = |c: f64, s: f64| grid.iter().map(|&x| profile(c)(x + s).re).collect::<Vec<_>>();
    let l2_left = matrep::l2_distance(&left, &shifted(lc, args.t));
    let l2_right = matrep::l2_distance(&right, &shifted(rc, -args.t));
    let max_imag = fields
        .left
        .iter()
        .chain(&fields.right)
        .map(|z| z.im.abs())
        .fold(0.0, f64::max);
    let nums = |v: &[f64]| v.iter().map(|&x| num(x)).collect::<Vec<_>>();
    let mut report = Report::new(json!({
        "t": num(args.t),
        "x": nums(&grid),
        "left": nums(&left),
        "right": nums(&right),
        "l2_left": num(l2_left),
        "l2_right": num(l2_right),
        "max_imag": num(max_imag),
    }));
    report.require(l2_left.max(l2_right) <= tol, || "transport residual above tolerance".into());
    report.require(max_imag == 0.0, || format!("real data acquired imaginary part {max_imag:e}"));
    Ok(report)
}
