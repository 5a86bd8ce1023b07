use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use sgt_core::classify::classify;
use sgt_core::format::{write_cayley, write_rees};
use sgt_core::structure::{
    archimedean_decomposition, cr_decomposition, diagonal_cyclic_witness, rees_coordinates,
    theta_congruence, Decomposition,
};
use sgt_core::verify::{self, Built, Claim, Construction, PairChoice, VerificationReport};
use sgt_core::{
    enumerate_right_congruences, find_x_sequence, green_data, library, maximal_subgroups,
    minimal_generating_pairs, rc_diameter, rc_generate, schutzenberger, Diameter, FiniteSemigroup,
    Multiplier, PairSet, RightCongruence,
};

use crate::{read_file, read_input, Cli, Command, DecomposeMode, Failure, Output, PairArgs};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "sweep")]
    construction: Option<ConstructionArg>,
    /// Run every construction over the built-in library.
    #[arg(long, conflicts_with = "construction")]
    sweep: bool,
    /// Pairs generating rho (fg, dp, quotient, ideal, extend) or the pairs X
    /// generating L (lclass; defaults to a minimal set).
    #[command(flatten)]
    pairs: PairArgs,
    /// Pairs generating sigma (extend).
    #[arg(long)]
    sigma: Vec<String>,
    /// Generating set of S (fg; defaults to a greedy one).
    #[arg(long)]
    gens: Option<String>,
    /// Element whose H-class is used (schutz).
    #[arg(long)]
    element: Option<usize>,
    /// Second semigroup: N for dp, T for quotient.
    #[arg(long)]
    other: Option<PathBuf>,
    /// Images of the homomorphism S -> T (quotient).
    #[arg(long)]
    theta: Option<String>,
    /// Members of the ideal (ideal); rho is then given in positions within it.
    #[arg(long)]
    ideal: Option<String>,
    /// Use every within-class pair instead of minimal generating pairs.
    #[arg(long)]
    full: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Fg,
    Lclass,
    Dp,
    Schutz,
    Quotient,
    Ideal,
    Extend,
    Diagonal,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn numbers(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| usage(format!("expected an integer, found `{t}`")))
        })
        .collect()
}

pub fn parse_pairs(values: &[String], n: usize) -> Result<PairSet, Failure> {
    let mut out = PairSet::new();
    for value in values {
        for chunk in value
            .split([',', ';'])
            .map(str::trim)
            .filter(|c| !c.is_empty())
        {
            let nums: Vec<&str> = chunk.split_whitespace().collect();
            let [a, b] = nums[..] else {
                return Err(usage(format!("a pair needs two elements, found `{chunk}`")));
            };
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| usage(format!("expected an integer, found `{t}`")))
            };
            out.insert(parse(a)?, parse(b)?);
        }
    }
    out.check_range(n)?;
    Ok(out)
}

fn element_set(text: &str, n: usize) -> Result<BTreeSet<usize>, Failure> {
    let set: BTreeSet<usize> = numbers(text)?.into_iter().collect();
    if let Some(&bad) = set.iter().find(|&&a| a >= n) {
        return Err(sgt_core::Error::ElementOutOfRange {
            index: bad,
            size: n,
        }
        .into());
    }
    Ok(set)
}

fn check_element(s: &FiniteSemigroup, a: usize) -> Result<(), Failure> {
    if a >= s.size() {
        return Err(sgt_core::Error::ElementOutOfRange {
            index: a,
            size: s.size(),
        }
        .into());
    }
    Ok(())
}

fn set_text(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn classes_text(rho: &RightCongruence) -> String {
    rho.classes()
        .iter()
        .map(|c| set_text(c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn pairs_text(pairs: &PairSet) -> String {
    if pairs.is_empty() {
        return "(none)".into();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("{a} {b}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn table_text(s: &FiniteSemigroup) -> String {
    let width = s.size().saturating_sub(1).to_string().len();
    let mut out = String::new();
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

fn to_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("values serialise")
}

fn done(text: String) -> Result<Output, Failure> {
    Ok(Output { text, ok: true })
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Command::Verify(args) = &cli.command {
        if args.sweep {
            return sweep(cli.json);
        }
    }
    let parsed = read_input(cli)?;
    let s = &parsed.semigroup;
    let n = s.size();
    match &cli.command {
        Command::Info => info(s, cli.json),
        Command::Green => green(s, cli.json),
        Command::Congruences { max } => {
            let lattice = enumerate_right_congruences(s, *max)?;
            if cli.json {
                let all: Vec<&RightCongruence> = lattice.iter().collect();
                return done(to_json(
                    &json!({ "count": lattice.len(), "congruences": all }),
                ));
            }
            let mut out = format!("{} right congruences\n", lattice.len());
            for rho in &lattice {
                let _ = writeln!(out, "index {}: {}", rho.index(), classes_text(rho));
            }
            done(out)
        }
        Command::Close { pairs, two_sided } => {
            let x = parse_pairs(&pairs.pairs, n)?;
            let rho = rc_generate(s, &x, *two_sided);
            // the congruence is printed as compact JSON in both modes
            done(serde_json::to_string(&rho).expect("serialises"))
        }
        Command::Witness { pairs, from, to } => {
            let x = parse_pairs(&pairs.pairs, n)?;
            check_element(s, *from)?;
            check_element(s, *to)?;
            let seq = find_x_sequence(s, &x, *from, *to);
            if cli.json {
                return done(to_json(&json!({ "from": from, "to": to, "sequence": seq })));
            }
            let Some(seq) = seq else {
                return done(format!(
                    "{from} and {to} are not related by the generated congruence"
                ));
            };
            let terms = seq.terms(s);
            let mut out = format!("{from} -> {to} in {} step(s)\n", seq.len());
            for (k, step) in seq.steps.iter().enumerate() {
                let m = match step.s {
                    Multiplier::Elem(t) => t.to_string(),
                    Multiplier::One => "1".into(),
                };
                let _ = writeln!(
                    out,
                    "  {} = {}*{m}, {}*{m} = {}",
                    terms[k],
                    step.x,
                    step.y,
                    terms[k + 1]
                );
            }
            done(out)
        }
        Command::Minimize { pairs, exact_limit } => {
            let x = parse_pairs(&pairs.pairs, n)?;
            let rho = rc_generate(s, &x, false);
            let out = minimal_generating_pairs(s, &rho, *exact_limit);
            if cli.json {
                return done(to_json(
                    &json!({ "congruence": rho, "pairs": out.pairs, "optimal": out.optimal }),
                ));
            }
            done(format!(
                "congruence: {}\npairs: {}\noptimal: {}\n",
                classes_text(&rho),
                pairs_text(&out.pairs),
                out.optimal
            ))
        }
        Command::Diameter { pairs } => {
            let x = parse_pairs(&pairs.pairs, n)?;
            let d = rc_diameter(s, &x);
            if cli.json {
                return done(to_json(&json!(d)));
            }
            done(match d {
                Diameter::Bounded { diameter } => format!("diameter: {diameter}"),
                Diameter::Disconnected { index } => {
                    format!("undefined: the pairs generate {index} classes")
                }
            })
        }
        Command::Schutz { element } => {
            let sg = schutzenberger(s, *element)?;
            if cli.json {
                return done(to_json(&json!({
                    "h_class": sg.h_class,
                    "stabilizer": sg.stabilizer,
                    "formal_identity": sg.formal_identity,
                    "order": sg.group.size(),
                    "representatives": sg.representatives(),
                    "group": sg.group,
                })));
            }
            let stab: Vec<String> = sg
                .stabilizer
                .iter()
                .map(|&t| {
                    if t == sg.formal_identity {
                        "id".to_string()
                    } else {
                        t.to_string()
                    }
                })
                .collect();
            done(format!(
                "H-class: {}\nstabiliser: {{{}}}\norder: {}\ngroup table:\n{}",
                set_text(&sg.h_class),
                stab.join(", "),
                sg.group.size(),
                table_text(&sg.group)
            ))
        }
        Command::Decompose { mode } => {
            let d = match mode {
                DecomposeMode::Cr => cr_decomposition(s)?,
                DecomposeMode::Arch => archimedean_decomposition(s)?,
            };
            decomposition(&d, cli.json)
        }
        Command::Rees { to_coordinates, .. } => {
            if *to_coordinates {
                let coords = rees_coordinates(s)?;
                if cli.json {
                    return done(to_json(&json!({
                        "structure": coords.structure,
                        "to_original": coords.to_original,
                    })));
                }
                let map: Vec<String> = coords.to_original.iter().map(usize::to_string).collect();
                return done(format!(
                    "# to_original: {}\n{}",
                    map.join(" "),
                    write_rees(&coords.structure)
                ));
            }
            if parsed.rees.is_none() {
                return Err(usage("--construct needs a Rees-format input"));
            }
            if cli.json {
                return done(to_json(&json!(s)));
            }
            done(write_cayley(s))
        }
        Command::Theta => {
            let r = parsed
                .rees
                .as_ref()
                .ok_or_else(|| usage("theta needs a Rees-format input"))?;
            let (pattern, rho) = theta_congruence(s, r)?;
            if cli.json {
                return done(to_json(&json!({
                    "patterns": pattern.rows,
                    "distinct": pattern.distinct(),
                    "congruence": rho,
                })));
            }
            let mut out = String::from("row patterns:\n");
            for (j, row) in pattern.rows.iter().enumerate() {
                let bits: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
                let _ = writeln!(out, "  {j}: {bits}");
            }
            let _ = writeln!(
                out,
                "distinct: {}\nindex: {}\nclasses: {}",
                pattern.distinct(),
                rho.index(),
                classes_text(&rho)
            );
            done(out)
        }
        Command::Verify(args) => verify_one(s, args, cli),
    }
}

fn info(s: &FiniteSemigroup, as_json: bool) -> Result<Output, Failure> {
    let props = serde_json::to_value(classify(s)).expect("serialises");
    if as_json {
        return done(to_json(&json!({
            "size": s.size(),
            "identity": s.identity(),
            "zero": s.zero(),
            "idempotents": s.idempotents(),
            "properties": props,
        })));
    }
    let show = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    let idem: Vec<String> = s.idempotents().iter().map(usize::to_string).collect();
    let mut out = format!(
        "size: {}\nidentity: {}\nzero: {}\nidempotents: {}\n",
        s.size(),
        show(s.identity()),
        show(s.zero()),
        idem.join(" ")
    );
    if let Value::Object(map) = props {
        for (k, v) in map {
            let _ = writeln!(out, "{k}: {v}");
        }
    }
    done(out)
}

fn green(s: &FiniteSemigroup, as_json: bool) -> Result<Output, Failure> {
    let g = green_data(s);
    let boxes = g.egg_box();
    let groups = maximal_subgroups(s);
    if as_json {
        let groups: Vec<Value> = groups
            .iter()
            .map(|(members, table)| json!({ "members": members, "order": table.size() }))
            .collect();
        return done(to_json(&json!({
            "r": g.r, "l": g.l, "h": g.h, "d": g.d, "j": g.j,
            "d_classes": boxes,
            "maximal_subgroups": groups,
        })));
    }
    let mut out = String::new();
    for (name, p) in [("R", &g.r), ("L", &g.l), ("H", &g.h), ("D", &g.d)] {
        let _ = writeln!(out, "{name}: {}", classes_text(p));
    }
    for b in &boxes {
        let _ = writeln!(
            out,
            "\nD-class {} ({} x {}, |H| = {}{})",
            b.d,
            b.r_rows,
            b.l_cols,
            b.h_size,
            if b.is_group { ", regular" } else { "" }
        );
        out.push_str(&b.render(s));
    }
    out.push_str("\nmaximal subgroups:\n");
    for (members, table) in &groups {
        let _ = writeln!(out, "  {} order {}", set_text(members), table.size());
    }
    done(out)
}

fn decomposition(d: &Decomposition, as_json: bool) -> Result<Output, Failure> {
    if as_json {
        let components: Vec<Value> = d
            .components
            .iter()
            .map(|(members, table)| json!({ "members": members, "table": table }))
            .collect();
        return done(to_json(&json!({
            "kind": d.kind,
            "semilattice": d.semilattice,
            "components": components,
        })));
    }
    let mut out = format!(
        "semilattice of {} components:\n{}",
        d.components.len(),
        table_text(&d.semilattice)
    );
    for (k, (members, table)) in d.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {k}: {} (size {})",
            set_text(members),
            table.size()
        );
    }
    done(out)
}

fn report_output(report: &VerificationReport, as_json: bool) -> Result<Output, Failure> {
    let text = if as_json {
        to_json(&json!(report))
    } else {
        let built = match &report.built {
            Built::Pairs(p) => format!("pairs {}", pairs_text(p)),
            Built::Elements(e) => format!("elements {}", set_text(e)),
        };
        let (expected, computed) = match &report.claim {
            Claim::Congruence { expected, computed } => {
                (classes_text(expected), classes_text(computed))
            }
            Claim::Generation { expected, computed } => (
                set_text(&expected.iter().copied().collect::<Vec<_>>()),
                set_text(&computed.iter().copied().collect::<Vec<_>>()),
            ),
        };
        let mut out = format!(
            "construction: {}\ninputs: {}\nbuilt: {built}\nexpected: {expected}\ncomputed: {computed}\npass: {}\n",
            report.construction, report.inputs, report.pass
        );
        if let Some(d) = report.distinguishing {
            let _ = writeln!(out, "distinguishing: {d:?}");
        }
        out
    };
    Ok(Output {
        text,
        ok: report.pass,
    })
}

fn verify_one(s: &FiniteSemigroup, args: &VerifyArgs, cli: &Cli) -> Result<Output, Failure> {
    let n = s.size();
    let choice = if args.full {
        PairChoice::Full
    } else {
        PairChoice::Minimal
    };
    let rho_of = |t: &FiniteSemigroup| -> Result<RightCongruence, Failure> {
        Ok(rc_generate(
            t,
            &parse_pairs(&args.pairs.pairs, t.size())?,
            false,
        ))
    };
    let other = || -> Result<FiniteSemigroup, Failure> {
        let path = args
            .other
            .as_ref()
            .ok_or_else(|| usage("--other FILE is required"))?;
        Ok(read_file(path, sgt_core::Format::Auto)?.semigroup)
    };
    let construction = args.construction.expect("clap requires it without --sweep");
    let report = match construction {
        ConstructionArg::Fg => {
            let gens = match &args.gens {
                Some(g) => element_set(g, n)?,
                None => verify::greedy_generators(s),
            };
            verify::verify_fg_gens(s, &gens, &rho_of(s)?)?
        }
        ConstructionArg::Lclass => {
            let x = if args.pairs.pairs.is_empty() {
                minimal_generating_pairs(s, &green_data(s).l, sgt_core::DEFAULT_EXACT_LIMIT).pairs
            } else {
                parse_pairs(&args.pairs.pairs, n)?
            };
            verify::verify_lclass_gens(s, &x)?
        }
        ConstructionArg::Dp => {
            let right = other()?;
            let product = FiniteSemigroup::direct_product(s, &right);
            verify::verify_dp_gens(s, &right, &rho_of(&product)?, choice)?
        }
        ConstructionArg::Schutz => {
            let element = args.element.ok_or_else(|| usage("--element is required"))?;
            verify::verify_schutz_gens(s, element, choice)?
        }
        ConstructionArg::Quotient => {
            let t = other()?;
            let theta = numbers(
                args.theta
                    .as_deref()
                    .ok_or_else(|| usage("--theta is required"))?,
            )?;
            verify::verify_quotient_gens(s, &t, &theta, &rho_of(&t)?, choice)?
        }
        ConstructionArg::Ideal => {
            let ideal = element_set(
                args.ideal
                    .as_deref()
                    .ok_or_else(|| usage("--ideal is required"))?,
                n,
            )?;
            let members: Vec<usize> = ideal.iter().copied().collect();
            s.check_ideal(&ideal)?;
            let sub = s.restrict(&members)?;
            verify::verify_ideal_gens(s, &ideal, &rho_of(&sub)?, choice)?
        }
        ConstructionArg::Extend => {
            let rho = rho_of(s)?;
            let sigma = rc_generate(s, &parse_pairs(&args.sigma, n)?, false);
            verify::verify_extend_gens(s, &rho, &sigma, choice)?
        }
        ConstructionArg::Diagonal => {
            let witness = diagonal_cyclic_witness(s);
            // S x S is never cyclic for |S| >= 2, so a witness is expected
            // only for the trivial semigroup
            let ok = witness.is_some() == (n == 1);
            let text = if cli.json {
                to_json(&json!({ "construction": "diagonal", "witness": witness, "pass": ok }))
            } else {
                let w = witness.map_or("none".to_string(), |(a, b)| format!("({a}, {b})"));
                format!("construction: diagonal\nwitness: {w}\npass: {ok}\n")
            };
            return Ok(Output { text, ok });
        }
    };
    report_output(&report, cli.json)
}

fn sweep(as_json: bool) -> Result<Output, Failure> {
    let mut lines: Vec<verify::SweepLine> = Construction::ALL
        .iter()
        .map(|&c| verify::sweep(c, 8, 3))
        .collect();
    let mut diagonal = verify::SweepLine {
        construction: "diagonal".into(),
        ..Default::default()
    };
    for (name, s) in library::standard() {
        diagonal.instances += 1;
        if diagonal_cyclic_witness(&s).is_some() != (s.size() == 1) {
            diagonal.failures.push(name);
        }
    }
    lines.push(diagonal);
    let ok = lines.iter().all(verify::SweepLine::passed);
    let text = if as_json {
        to_json(&json!({ "constructions": lines, "pass": ok }))
    } else {
        let mut out = format!(
            "{:<12} {:>9} {:>9}  status\n",
            "construction", "instances", "failures"
        );
        for l in &lines {
            let _ = writeln!(
                out,
                "{:<12} {:>9} {:>9}  {}",
                l.construction,
                l.instances,
                l.failures.len(),
                if l.passed() { "pass" } else { "FAIL" }
            );
        }
        for l in lines.iter().filter(|l| !l.passed()) {
            for f in l.failures.iter().take(3) {
                let _ = writeln!(out, "  {}: {f}", l.construction);
            }
        }
        out
    };
    Ok(Output { text, ok })
}
