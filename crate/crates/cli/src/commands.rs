use dedekind_core::dedekind::{
    cos_closed_form, dedekind_sum, exp_closed_form, franel_integral, integral_recip_rhs,
    power_basis_recip_check, r1_closed_form, rademacher_rhs, reciprocity_lhs, shifted_rhs,
    sin_closed_form,
};
use dedekind_core::exact::{gcd, int, ratio};
use dedekind_core::lattice::{epsilon_l, hj_generators, verify_unimodular};
use dedekind_core::periodic::parse_list;
use dedekind_core::zeta::{
    bernoulli_recip_general, bernoulli_recip_r2, multiple_zeta_trunc, Pairing, QVector,
    TruncationPlan, ZetaVariant,
};
use dedekind_core::{Error, Method, NuVector, PeriodicFn, ReciprocityReport, Scalar};
use rayon::prelude::*;

use crate::output::{Cell, Output, Record};
use crate::{
    Command, FranelArgs, HjArgs, MethodArg, PairingArg, RecipArgs, SumArgs, SweepArgs, SweepMethod,
    VariantArg, ZetaArgs,
};

/// Largest `--max` accepted by `sweep`.
pub const SWEEP_LIMIT: u64 = 100;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

/// Library errors are caller errors (exit 2) except broken invariants.
fn lib(context: &str) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError {
        code: if matches!(e, Error::Inconsistent(_)) {
            1
        } else {
            2
        },
        message: format!("{context}: {e}"),
    }
}

fn parse_nu(s: &str) -> Result<NuVector, CliError> {
    s.parse().map_err(lib("--nu"))
}

fn parse_q(s: &str) -> Result<QVector, CliError> {
    s.parse().map_err(lib("--q"))
}

fn parse_f(s: &str) -> Result<Vec<PeriodicFn>, CliError> {
    let f = parse_list(s).map_err(lib("--f"))?;
    for x in &f {
        x.validate().map_err(lib("--f"))?;
    }
    Ok(f)
}

pub fn run(cmd: Command) -> Result<(String, u8), CliError> {
    match cmd {
        Command::Sum(a) => sum(a).map(|s| (s, 0)),
        Command::Recip(a) => {
            let (out, _) = recip(&a)?;
            Ok((out, 0))
        }
        Command::Verify(a) => {
            let (out, pass) = recip(&a)?;
            Ok((out, if pass { 0 } else { 3 }))
        }
        Command::Franel(a) => franel(a).map(|s| (s, 0)),
        Command::Hj(a) => hj(a).map(|s| (s, 0)),
        Command::Zeta(a) => zeta(a).map(|s| (s, 0)),
        Command::Sweep(a) => sweep(a),
    }
}

fn sum(a: SumArgs) -> Result<String, CliError> {
    let nu = parse_nu(&a.nu)?;
    let f = parse_f(&a.f)?;
    let v = dedekind_sum(&f, &nu, a.k).map_err(lib("sum"))?;
    let rec = Record::new()
        .with("f", Cell::Text(dedekind_core::periodic::format_list(&f)))
        .with("nu", Cell::Text(nu.to_string()))
        .with("k", Cell::Int(a.k as i64))
        .with("value", Cell::scalar(&v, a.out.numeric));
    Ok(Output::One(rec).render(a.out.format))
}

fn bernoulli_q(a: &RecipArgs, f: Option<&[PeriodicFn]>) -> Result<QVector, CliError> {
    if let Some(q) = &a.q {
        return parse_q(q);
    }
    let f = f.ok_or_else(|| usage("--q or --f with Bernoulli descriptors is required"))?;
    let q = f
        .iter()
        .map(|x| match x {
            PeriodicFn::Bernoulli(q) => Ok(*q),
            other => Err(usage(format!("--f: {other} is not a Bernoulli descriptor"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    QVector::new(q).map_err(lib("--f"))
}

/// Builds the report for `recip`/`verify` and decides pass or fail.
fn report(a: &RecipArgs) -> Result<(ReciprocityReport, bool), CliError> {
    let nu = parse_nu(&a.nu)?;
    let f = a.f.as_deref().map(parse_f).transpose()?;
    let lhs_of = |f: &[PeriodicFn]| reciprocity_lhs(f, &nu).map_err(lib("--f"));
    let exact = Scalar::Exact;
    let need_f = || {
        f.clone()
            .ok_or_else(|| usage("--f is required for this method"))
    };
    let default_n = if nu.r() <= 1 { 10_000 } else { 2000 };
    let plan = TruncationPlan::new(a.n.unwrap_or(default_n));
    let rep = match a.method {
        MethodArg::Rademacher => {
            let f = f
                .clone()
                .unwrap_or_else(|| vec![PeriodicFn::Bernoulli(1); 3]);
            let rhs = rademacher_rhs(&nu).map_err(lib("--nu"))?;
            ReciprocityReport::new(lhs_of(&f)?, exact(rhs), Method::Rademacher, None)
        }
        MethodArg::Shifted => {
            let f = need_f()?;
            let shifts = f
                .iter()
                .map(|x| match x {
                    PeriodicFn::ShiftedFrac(a) => Ok(a.clone()),
                    other => Err(usage(format!("--f: {other} is not a shift:a descriptor"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let rhs = shifted_rhs(&nu, &shifts).map_err(lib("--f"))?;
            ReciprocityReport::new(lhs_of(&f)?, exact(rhs), Method::Shifted, None)
        }
        MethodArg::R1 => {
            let q = match (&f, &a.q) {
                (Some(f), _) => match f.as_slice() {
                    [PeriodicFn::Bernoulli(1), PeriodicFn::Bernoulli(q)] => *q,
                    _ => return Err(usage("--f must be b:1,b:q for the r1 method")),
                },
                (None, Some(q)) => q
                    .trim()
                    .parse()
                    .map_err(|_| usage("--q must be a single integer for r1"))?,
                (None, None) => return Err(usage("r1 needs --q or --f")),
            };
            let fs = [PeriodicFn::Bernoulli(1), PeriodicFn::Bernoulli(q)];
            let rhs = r1_closed_form(&nu, q).map_err(lib("--q"))?;
            ReciprocityReport::new(lhs_of(&fs)?, exact(rhs), Method::R1, None)
        }
        MethodArg::Integral => {
            let f = need_f()?;
            let rhs = integral_recip_rhs(&f, &nu).map_err(lib("--f"))?;
            ReciprocityReport::new(lhs_of(&f)?, exact(rhs), Method::Integral, None)
        }
        MethodArg::Fourier => {
            let q = bernoulli_q(a, f.as_deref())?;
            bernoulli_recip_general(&nu, &q, &plan).map_err(lib("fourier"))?
        }
        MethodArg::BernoulliR2 => {
            let q = bernoulli_q(a, f.as_deref())?;
            bernoulli_recip_r2(&nu, &q, &plan).map_err(lib("bernoulli-r2"))?
        }
        MethodArg::PowerBasis => {
            let q = parse_q(
                a.q.as_deref()
                    .ok_or_else(|| usage("power-basis needs --q"))?,
            )?;
            power_basis_recip_check(q.entries(), &nu).map_err(lib("--q"))?
        }
        MethodArg::Exp | MethodArg::Cos | MethodArg::Sin => {
            let k =
                a.k.ok_or_else(|| usage("--k is required for the trigonometric methods"))?;
            let (g, method) = match a.method {
                MethodArg::Exp => (PeriodicFn::ExpE, Method::Exp),
                MethodArg::Cos => (PeriodicFn::Cos, Method::Cos),
                _ => (PeriodicFn::Sin, Method::Sin),
            };
            let lhs = dedekind_sum(&vec![g; nu.len()], &nu, k).map_err(lib("--k"))?;
            let rhs = match method {
                Method::Exp => int(exp_closed_form(&nu, k).map_err(lib("--k"))?),
                Method::Cos => cos_closed_form(&nu, k).map_err(lib("--k"))?,
                _ => {
                    let s = sin_closed_form(&nu, k).map_err(lib("--k"))?;
                    s.as_rational()
                        .cloned()
                        .ok_or_else(|| usage("sine closed form is not rational"))?
                }
            };
            ReciprocityReport::new(lhs, exact(rhs), method, None)
        }
    };
    let trig = matches!(a.method, MethodArg::Exp | MethodArg::Cos | MethodArg::Sin);
    let rel = a.tol.unwrap_or(if trig { 1e-9 } else { 1e-3 });
    let abs = a.abs_tol.unwrap_or(if trig { 1e-9 } else { 1e-6 });
    let pass = rep.within(rel, abs);
    Ok((rep, pass))
}

fn recip(a: &RecipArgs) -> Result<(String, bool), CliError> {
    let (rep, pass) = report(a)?;
    let n = a.out.numeric;
    let rec = Record::new()
        .with("lhs", Cell::scalar(&rep.lhs, n))
        .with("rhs", Cell::scalar(&rep.rhs, n))
        .with("residual", Cell::scalar(&rep.residual, n))
        .with("method", Cell::Text(rep.method.name().into()))
        .with("N", rep.bound.map_or(Cell::Null, |b| Cell::Int(b as i64)));
    Ok((Output::One(rec).render(a.out.format), pass))
}

fn franel(a: FranelArgs) -> Result<String, CliError> {
    let nu: Vec<u64> =
        a.nu.split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| usage(format!("--nu: bad entry `{p}`")))
            })
            .collect::<Result<_, _>>()?;
    let q = parse_q(&a.q)?;
    let v = franel_integral(q.entries(), &nu).map_err(lib("--q/--nu"))?;
    Ok(
        Output::One(Record::new().with("value", Cell::rational(&v, a.out.numeric)))
            .render(a.out.format),
    )
}

fn hj(a: HjArgs) -> Result<String, CliError> {
    let nu = parse_nu(&a.nu)?;
    let fan = hj_generators(&nu, a.l).map_err(lib("--l"))?;
    let eps = epsilon_l(&nu, a.l).map_err(lib("--l"))?;
    let unimodular = verify_unimodular(&fan, 3 * nu.max());
    let rec = Record::new()
        .with("nu", Cell::Text(nu.to_string()))
        .with("l", Cell::Int(a.l as i64))
        .with("epsilon", Cell::Int(eps))
        .with("generators", Cell::json(&fan.generators))
        .with("cones", Cell::json(&fan.cones))
        .with("sequence", Cell::json(&fan.sequence))
        .with("unimodular", Cell::Bool(unimodular));
    Ok(Output::One(rec).render(a.out.format))
}

fn zeta(a: ZetaArgs) -> Result<String, CliError> {
    let nu = parse_nu(&a.nu)?;
    let q = parse_q(&a.q)?;
    let variant = match a.variant {
        VariantArg::Full => ZetaVariant::Full,
        VariantArg::Y => ZetaVariant::Y,
        VariantArg::Z => ZetaVariant::Z,
        VariantArg::Plain => ZetaVariant::Plain,
    };
    let pairing = match a.pairing {
        PairingArg::Symmetric => Pairing::Symmetric,
        PairingArg::None => Pairing::None,
    };
    let plan = TruncationPlan::new(a.n).with_pairing(pairing);
    let v = multiple_zeta_trunc(&nu, &q, a.k, variant, &plan).map_err(lib("zeta"))?;
    let rec = Record::new()
        .with("value", Cell::Float(v.value))
        .with("plan", Cell::json(&plan))
        .with("pairing", Cell::json(&plan.pairing))
        .with("points_used", Cell::Int(v.points_used as i64));
    Ok(Output::One(rec).render(a.out.format))
}

struct Row {
    nu: String,
    f: String,
    lhs: Scalar,
    rhs: Scalar,
    method: &'static str,
}

fn coprime_tuples(len: usize, max: u64) -> Vec<NuVector> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(len: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<NuVector>) {
        if cur.len() == len {
            if let Ok(v) = NuVector::new(cur.clone()) {
                out.push(v);
            }
            return;
        }
        let start = cur.last().map_or(1, |x| x + 1);
        for x in start..=max {
            if cur.iter().all(|&y| gcd(x as i64, y as i64) == 1) {
                cur.push(x);
                rec(len, max, cur, out);
                cur.pop();
            }
        }
    }
    rec(len, max, &mut cur, &mut out);
    out
}

fn sweep(a: SweepArgs) -> Result<(String, u8), CliError> {
    if a.max == 0 || a.max > SWEEP_LIMIT {
        return Err(usage(format!("--max must be in 1..={SWEEP_LIMIT}")));
    }
    let rows: Vec<Result<Row, CliError>> = match a.method {
        SweepMethod::Rademacher => {
            let b1 = vec![PeriodicFn::Bernoulli(1); 3];
            coprime_tuples(3, a.max)
                .par_iter()
                .map(|nu| {
                    Ok(Row {
                        nu: nu.to_string(),
                        f: "b:1,b:1,b:1".into(),
                        lhs: reciprocity_lhs(&b1, nu).map_err(lib("sweep"))?,
                        rhs: Scalar::Exact(rademacher_rhs(nu).map_err(lib("sweep"))?),
                        method: Method::Rademacher.name(),
                    })
                })
                .collect()
        }
        SweepMethod::Franel => {
            let pairs: Vec<(u64, u64)> = (1..=a.max)
                .flat_map(|m| (m + 1..=a.max).map(move |n| (m, n)))
                .collect();
            pairs
                .par_iter()
                .map(|&(m, n)| {
                    let g = gcd(m as i64, n as i64);
                    Ok(Row {
                        nu: format!("{m},{n}"),
                        f: "b:1,b:1".into(),
                        lhs: Scalar::Exact(
                            franel_integral(&[1, 1], &[m, n]).map_err(lib("sweep"))?,
                        ),
                        rhs: Scalar::Exact(ratio(g * g, 12 * (m * n) as i64)),
                        method: "franel",
                    })
                })
                .collect()
        }
        SweepMethod::R1 => {
            let qs: Vec<u32> = match &a.q {
                Some(s) => s
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| usage(format!("--q: bad entry `{p}`")))
                    })
                    .collect::<Result<_, _>>()?,
                None => vec![2, 4, 6],
            };
            let cases: Vec<(NuVector, u32)> = (1..=a.max)
                .flat_map(|x| (1..=a.max).map(move |y| (x, y)))
                .filter_map(|(x, y)| NuVector::new(vec![x, y]).ok())
                .flat_map(|nu| qs.iter().map(move |&q| (nu.clone(), q)))
                .collect();
            cases
                .par_iter()
                .map(|(nu, q)| {
                    let f = [PeriodicFn::Bernoulli(1), PeriodicFn::Bernoulli(*q)];
                    Ok(Row {
                        nu: nu.to_string(),
                        f: dedekind_core::periodic::format_list(&f),
                        lhs: reciprocity_lhs(&f, nu).map_err(lib("sweep"))?,
                        rhs: Scalar::Exact(r1_closed_form(nu, *q).map_err(lib("--q"))?),
                        method: Method::R1.name(),
                    })
                })
                .collect()
        }
        SweepMethod::PowerBasis => {
            let q = parse_q(a.q.as_deref().unwrap_or("1,1,1"))?;
            coprime_tuples(q.len(), a.max)
                .par_iter()
                .map(|nu| {
                    let rep = power_basis_recip_check(q.entries(), nu).map_err(lib("sweep"))?;
                    Ok(Row {
                        nu: nu.to_string(),
                        f: q.entries()
                            .iter()
                            .map(|x| format!("x^{x}"))
                            .collect::<Vec<_>>()
                            .join(","),
                        lhs: rep.lhs,
                        rhs: rep.rhs,
                        method: Method::PowerBasis.name(),
                    })
                })
                .collect()
        }
    };
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut flagged_any = false;
    let records = rows
        .iter()
        .map(|r| {
            let residual = r.lhs.sub(&r.rhs);
            let flagged = !matches!(&residual, Scalar::Exact(x) if *x == int(0));
            flagged_any |= flagged;
            Record::new()
                .with("nu", Cell::Text(r.nu.clone()))
                .with("f", Cell::Text(r.f.clone()))
                .with("lhs", Cell::scalar(&r.lhs, a.numeric))
                .with("rhs", Cell::scalar(&r.rhs, a.numeric))
                .with("residual", Cell::scalar(&residual, a.numeric))
                .with("method", Cell::Text(r.method.into()))
                .with("flagged", Cell::Bool(flagged))
        })
        .collect();
    Ok((
        Output::Table(records).render(a.format),
        if flagged_any { 3 } else { 0 },
    ))
}
