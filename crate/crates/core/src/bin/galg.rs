//! Batch front end: load inverse semigroups or actions from JSON, run
//! analyses, and emit deterministic JSON reports.
//!
//! Exit status: 0 success, 1 verification failure, 2 input error.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use groupoid_algebra::error::Error;
use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::germs;
use groupoid_algebra::groupoid;
use groupoid_algebra::io;
use groupoid_algebra::iso;
use groupoid_algebra::poset::MobiusTable;
use groupoid_algebra::reps;
use groupoid_algebra::semigroup::{BuildOptions, InverseSemigroup};
use groupoid_algebra::stone;

#[derive(Parser)]
#[command(
    name = "galg",
    version,
    about = "Exact algebra of finite inverse semigroups and groupoids"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Coefficient field: a prime p, or Q for the rationals.
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Seed for all randomized verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Element cap for closures.
    #[arg(long, global = true, default_value_t = 20000)]
    cap_order: usize,
    /// Arrow cap for slice enumeration.
    #[arg(long, global = true, default_value_t = 6)]
    cap_slices: usize,
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, idempotents, D-classes and maximal subgroups.
    Analyze { input: PathBuf },
    /// Möbius table of the natural partial order.
    Mobius { input: PathBuf },
    /// Underlying groupoid dump.
    Groupoid { input: PathBuf },
    /// Verify the change of basis onto the groupoid algebra.
    IsoCheck { input: PathBuf },
    /// Matrix-block decomposition by D-classes.
    Decompose { input: PathBuf },
    /// Classify irreducible representations.
    Irreps {
        input: PathBuf,
        /// Supplied irreducibles for non-built-in maximal subgroups.
        #[arg(long)]
        group_reps: Option<PathBuf>,
    },
    /// Center basis and dimension, by two independent routes.
    Center { input: PathBuf },
    /// Germ groupoid of an action file.
    Germs { input: PathBuf },
    /// Full property-suite run on one semigroup.
    Verify { input: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    if s == "Q" {
        return Ok(FieldSpec::Rational);
    }
    let p: u64 = s
        .parse()
        .map_err(|_| Error::InvalidInput(format!("field must be a prime or Q, got {s}")))?;
    FieldSpec::Prime(p).checked()
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

struct Ctx {
    field: FieldSpec,
    seed: u64,
    opts: BuildOptions,
    cap_slices: usize,
}

fn load(ctx: &Ctx, path: &PathBuf) -> Result<InverseSemigroup, Error> {
    io::parse_semigroup(&read_file(path)?, &ctx.opts)
}

fn analyze(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let dc = s.d_classes();
    Ok(json!({
        "order": s.order,
        "idempotents": s.idempotents,
        "labels": s.labels,
        "natural_order_pairs": (0..s.order)
            .flat_map(|a| (0..s.order).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && s.natural_leq(a, b))
            .collect::<Vec<_>>(),
        "d_classes": dc.classes.iter().map(|c| json!({
            "rep": c.rep,
            "idempotents": c.idempotents,
            "witnesses": c.witnesses,
            "group_order": c.group.order(),
            "group_table": c.group.table,
        })).collect::<Vec<_>>(),
    }))
}

fn mobius(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let poset = s.natural_order_poset();
    let mob = MobiusTable::new(&poset);
    let table: Vec<Vec<String>> = (0..s.order)
        .map(|x| (0..s.order).map(|y| mob.mu(x, y).to_string()).collect())
        .collect();
    Ok(json!({
        "order": s.order,
        "linear_extension": poset.linear_extension(),
        "mobius": table,
    }))
}

fn groupoid_dump(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let g = groupoid::underlying_groupoid(&s);
    Ok(json!({
        "units": g.n_units,
        "arrows": (0..g.n_arrows).map(|a| json!({
            "index": a,
            "label": g.labels[a],
            "dom": g.dom[a],
            "ran": g.ran[a],
            "inv": g.inv[a],
        })).collect::<Vec<_>>(),
    }))
}

fn iso_check(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let w = iso::theta(&s, &ctx.field, ctx.seed)?;
    let unit = iso::semigroup_identity(&s, &ctx.field, ctx.seed)?;
    Ok(json!({
        "order": s.order,
        "multiplicative": true,
        "pairs_checked": match w.pairs_checked {
            iso::PairPolicy::Exhaustive => json!("exhaustive"),
            iso::PairPolicy::Sampled { pairs, seed } => json!({"sampled": pairs, "seed": seed}),
        },
        "unitriangular": true,
        "identity_coefficients": unit.coeffs.iter()
            .map(|(g, c)| json!([g, io::scalar_json(c)]))
            .collect::<Vec<_>>(),
    }))
}

fn decompose(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let d = iso::decompose(&s);
    Ok(json!({
        "blocks": d.blocks.iter().map(|b| json!({
            "class_rep": b.class_rep,
            "multiplicity": b.multiplicity,
            "group_order": b.group.order(),
            "group_table": b.group.table,
        })).collect::<Vec<_>>(),
        "total_dimension": d.total_dimension,
        "order": s.order,
    }))
}

fn irreps(ctx: &Ctx, path: &PathBuf, group_reps: &Option<PathBuf>) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let supplied = match group_reps {
        Some(p) => io::parse_group_reps(&read_file(p)?, &ctx.field)?,
        None => HashMap::new(),
    };
    let c = reps::classify_irreps(&s, &ctx.field, ctx.seed, &supplied)?;
    let rep_mats: Vec<Vec<groupoid_algebra::Matrix>> =
        c.irreps.iter().map(|r| r.s_matrices.clone()).collect();
    let (separates, witness) = reps::separates_points(&s, &rep_mats);
    Ok(json!({
        "irreps": c.irreps.iter().map(|r| json!({
            "class_rep": r.class_rep,
            "group_irrep_index": r.group_irrep_index,
            "dim": r.dim,
            "simple": true,
            "s_matrices": r.s_matrices.iter().map(io::matrix_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "sum_dim_sq": c.irreps.iter().map(|r| r.dim * r.dim).sum::<usize>(),
        "complete_certified": c.complete_certified,
        "separates_points": separates,
        "unseparated_witness": witness,
        "probing": {"seed": ctx.seed, "policy": "standard basis plus 8 seeded probes"},
    }))
}

fn center(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let g = groupoid::underlying_groupoid(&s);
    let basis = groupoid::center_basis(&g, &ctx.field);
    let commutant = groupoid::center_dimension_commutant(&g, &ctx.field);
    Ok(json!({
        "dimension": basis.len(),
        "commutant_dimension": commutant,
        "routes_agree": basis.len() == commutant,
        "basis": basis.iter().map(|b| {
            b.coeffs.iter().map(|(a, c)| json!([a, io::scalar_json(c)])).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    }))
}

fn germs_cmd(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let action = io::parse_action(&read_file(path)?, &ctx.opts)?;
    let gg = germs::germ_groupoid(&action)?;
    Ok(json!({
        "units": gg.groupoid.n_units,
        "arrows": gg.germs.iter().enumerate().map(|(i, g)| json!({
            "index": i,
            "point": g.point,
            "rep": g.rep,
            "label": gg.groupoid.labels[i],
            "dom": gg.groupoid.dom[i],
            "ran": gg.groupoid.ran[i],
            "inv": gg.groupoid.inv[i],
        })).collect::<Vec<_>>(),
        "slice_product_law": germs::slice_product_check(&action)?,
    }))
}

fn verify(ctx: &Ctx, path: &PathBuf) -> Result<Value, Error> {
    let s = load(ctx, path)?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| checks.push((name.to_string(), ok));

    push(
        "star_antiautomorphism",
        (0..s.order).all(|a| {
            s.star_of(s.star_of(a)) == a
                && (0..s.order)
                    .all(|b| s.star_of(s.product(a, b)) == s.product(s.star_of(b), s.star_of(a)))
        }),
    );
    push("natural_order_compatible", {
        (0..s.order).all(|a| {
            (0..s.order).all(|b| {
                !s.natural_leq(a, b)
                    || (0..s.order).all(|c| {
                        s.natural_leq(s.product(a, c), s.product(b, c))
                            && s.natural_leq(s.product(c, a), s.product(c, b))
                    })
            })
        })
    });
    let g = groupoid::underlying_groupoid(&s);
    push("convolution_associative", {
        let deltas: Vec<groupoid::AlgebraElement> = (0..g.n_arrows)
            .map(|a| groupoid::AlgebraElement::delta(ctx.field, a))
            .collect();
        let mut ok = true;
        'outer: for a in &deltas {
            for b in &deltas {
                for c in &deltas {
                    let ab = groupoid::convolve(&g, a, b)?;
                    let bc = groupoid::convolve(&g, b, c)?;
                    if groupoid::convolve(&g, &ab, c)? != groupoid::convolve(&g, a, &bc)? {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        ok
    });
    push("algebra_unit_identity", {
        let u = groupoid::algebra_unit(&g, &ctx.field);
        (0..g.n_arrows).all(|a| {
            let d = groupoid::AlgebraElement::delta(ctx.field, a);
            groupoid::convolve(&g, &u, &d)
                .map(|x| x == d)
                .unwrap_or(false)
                && groupoid::convolve(&g, &d, &u)
                    .map(|x| x == d)
                    .unwrap_or(false)
        })
    });
    push("filters_principal", {
        stone::all_filters(&s).len() == s.idempotents.len()
    });
    push("ultrafilters_primitive", {
        let uf = stone::ultrafilters(&s);
        let prim = stone::primitive_idempotents(&s);
        uf.len() == prim.len() && uf.iter().all(|f| prim.contains(&f.principal_min))
    });
    push("downset_meet_generators", {
        (0..s.order).all(|a| {
            (0..s.order).all(|b| {
                let gens = stone::downset_meet_generators(&s, a, b);
                (0..s.order).all(|u| {
                    (s.natural_leq(u, a) && s.natural_leq(u, b))
                        == gens.iter().any(|&w| s.natural_leq(u, w))
                })
            })
        })
    });
    push(
        "theta_multiplicative",
        iso::theta(&s, &ctx.field, ctx.seed).is_ok(),
    );
    push(
        "block_bookkeeping",
        iso::decompose(&s).total_dimension == s.order,
    );
    push(
        "universal_groupoid_embedding",
        germs::universal_groupoid(&s).is_ok(),
    );
    push(
        "slice_product_law",
        germs::slice_product_check(&s.munn_action())?,
    );
    if g.n_arrows <= ctx.cap_slices {
        push(
            "presentation_quotient",
            groupoid::presentation_check(&g, &ctx.field, ctx.cap_slices)?,
        );
    }

    let all_ok = checks.iter().all(|(_, ok)| *ok);
    Ok(json!({
        "checks": checks.iter().map(|(n, ok)| json!({"name": n, "ok": ok})).collect::<Vec<_>>(),
        "all_ok": all_ok,
    }))
}

fn run(cli: &Cli) -> Result<(Value, bool), Error> {
    let field = parse_field(&cli.field)?;
    let ctx = Ctx {
        field,
        seed: cli.seed,
        opts: BuildOptions {
            element_cap: cli.cap_order,
            seed: cli.seed,
            ..Default::default()
        },
        cap_slices: cli.cap_slices,
    };
    let report = match &cli.cmd {
        Cmd::Analyze { input } => analyze(&ctx, input)?,
        Cmd::Mobius { input } => mobius(&ctx, input)?,
        Cmd::Groupoid { input } => groupoid_dump(&ctx, input)?,
        Cmd::IsoCheck { input } => iso_check(&ctx, input)?,
        Cmd::Decompose { input } => decompose(&ctx, input)?,
        Cmd::Irreps { input, group_reps } => irreps(&ctx, input, group_reps)?,
        Cmd::Center { input } => center(&ctx, input)?,
        Cmd::Germs { input } => germs_cmd(&ctx, input)?,
        Cmd::Verify { input } => verify(&ctx, input)?,
    };
    // verification-style subcommands fail the run when a check fails
    let ok = report
        .get("all_ok")
        .and_then(Value::as_bool)
        .unwrap_or(true)
        && report
            .get("routes_agree")
            .and_then(Value::as_bool)
            .unwrap_or(true)
        && report
            .get("slice_product_law")
            .and_then(Value::as_bool)
            .unwrap_or(true);
    let wrapped = io::envelope(&ctx.field, ctx.seed, cli.cap_order, cli.cap_slices, report);
    Ok((wrapped, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&report).unwrap()
            } else {
                serde_json::to_string(&report).unwrap()
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidInput(_)
                | Error::NotPrime(_)
                | Error::ClosureCapExceeded { .. }
                | Error::SliceCapExceeded { .. }
                | Error::NotAssociative { .. }
                | Error::NotRegular(_)
                | Error::InverseNotUnique { .. }
                | Error::BadStar(_)
                | Error::BadAction(_)
                | Error::IncompleteGroupList { .. }
                | Error::NoBuiltinIrreps(_)
                | Error::FieldMismatch { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
