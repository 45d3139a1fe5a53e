use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use singcay::blocks::{self, has_defect0, table1, table1_csv, table2, table2_csv, table2_note};
use singcay::cayley::{build_connecting, verdict};
use singcay::characters::character_value;
use singcay::vanishing::{nonvanishing_classes, run_jobs, vanishing_certificate, CheckId, Vanishing};
use singcay::{CharacterLabel, ClassLabel, Config, Error, GroupKind, Half, Partition};

#[derive(Parser)]
#[command(name = "singcay", version, about = "Character values, p-blocks and singular Cayley graphs of S_n and A_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest n for which full character tables are built.
    #[arg(long, global = true)]
    max_n: Option<u32>,

    /// Largest group order the adjacency-matrix oracle may materialize.
    #[arg(long, global = true)]
    oracle_limit: Option<u64>,

    /// Worker threads for table builds and the check battery.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Value of one irreducible character on one class, e.g. `char 5 [4,1] (3,1,1)`.
    /// A trailing `+`/`-` on either label selects A_n.
    Char {
        n: u32,
        character: String,
        class: String,
        /// Force the group (S or A) instead of inferring it from the labels.
        #[arg(long)]
        group: Option<String>,
    },
    /// Defect group supports of the p-blocks of S_n and defect-0 verdicts.
    Blocks { n: u32, p: u32 },
    /// The minimal 2-defect and 3-defect support tables.
    Tables,
    /// Singularity verdict for Cay(G, H) with H the union of the given classes.
    Singular {
        group: String,
        n: u32,
        #[arg(required = true)]
        classes: Vec<String>,
    },
    /// Vanishing certificate for one class, or all non-vanishing classes.
    Vanishing {
        group: String,
        n: u32,
        class: Option<String>,
    },
    /// Run a check (or `all`) over a degree range such as `7..14`, `11` or `default`.
    Verify {
        check: String,
        #[arg(default_value = "default")]
        range: String,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut cfg = Config::default();
    if let Some(m) = cli.max_n {
        cfg.max_table_n = m;
    }
    if let Some(o) = cli.oracle_limit {
        cfg.max_oracle_group_order = o;
    }
    let result = match &cli.command {
        Command::Char {
            n,
            character,
            class,
            group,
        } => cmd_char(*n, character, class, group.as_deref(), cli.format),
        Command::Blocks { n, p } => cmd_blocks(*n, *p, cli.format),
        Command::Tables => cmd_tables(cli.format),
        Command::Singular { group, n, classes } => cmd_singular(group, *n, classes, &cfg, cli.format),
        Command::Vanishing { group, n, class } => {
            cmd_vanishing(group, *n, class.as_deref(), &cfg, cli.format)
        }
        Command::Verify { check, range } => cmd_verify(check, range, &cfg, cli.format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}

fn has_half(s: &str) -> bool {
    s.trim_end().ends_with('+') || s.trim_end().ends_with('-')
}

fn cmd_char(n: u32, character: &str, class: &str, group: Option<&str>, format: Format) -> Out {
    let group = match group {
        Some(g) => g.parse::<GroupKind>()?,
        None if has_half(character) || has_half(class) => GroupKind::Alt,
        None => GroupKind::Sym,
    };
    let chi = match group {
        GroupKind::Sym => character.parse::<CharacterLabel>()?,
        GroupKind::Alt => {
            let (body, half) = match character.trim().chars().last() {
                Some('+') => (&character.trim()[..character.trim().len() - 1], Half::Plus),
                Some('-') => (&character.trim()[..character.trim().len() - 1], Half::Minus),
                _ => (character.trim(), Half::Whole),
            };
            CharacterLabel::alt(body.parse::<Partition>()?, half)?
        }
    };
    let cls = ClassLabel::parse_in(class, group)?;
    if chi.n() != n || cls.n() != n {
        return Err(Failure::Usage(format!("{chi} and {cls} must both have size {n}")));
    }
    let value = character_value(&chi, &cls)?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("group,n,character,class,value\n{group},{n},\"{chi}\",\"{cls}\",{value}\n"),
        Format::Json => pretty(&json!({
            "group": group,
            "n": n,
            "character": chi,
            "class": cls,
            "value": value.to_json(),
        })),
    })
}

fn cmd_blocks(n: u32, p: u32, format: Format) -> Out {
    let supports = blocks::defect_supports(n, p)?;
    let min = blocks::min_defect_support(n, p)?;
    let min_defect = blocks::min_defect(n, p)?;
    let d0_sym = has_defect0(n, p, GroupKind::Sym)?;
    let d0_alt = has_defect0(n, p, GroupKind::Alt)?;
    Ok(match format {
        Format::Text => format!(
            "n = {n}, p = {p}\ndefect supports: {supports:?}\nmin defect support: {min}\nmin defect: {min_defect}\ndefect 0 in S_{n}: {d0_sym}\ndefect 0 in A_{n}: {d0_alt}\n"
        ),
        Format::Csv => {
            let mut s = String::from("n,p,defect_support,defect\n");
            for d in &supports {
                let defect = singcay::groups::factorial_p_exponent(*d as u64, p as u64);
                writeln!(s, "{n},{p},{d},{defect}").unwrap();
            }
            s
        }
        Format::Json => pretty(&json!({
            "n": n,
            "p": p,
            "defect_supports": supports,
            "min_defect_support": min,
            "min_defect": min_defect,
            "defect0_sym": d0_sym,
            "defect0_alt": d0_alt,
        })),
    })
}

fn cmd_tables(format: Format) -> Out {
    Ok(match format {
        Format::Json => pretty(&json!({
            "table1": table1(),
            "table2": table2(),
            "table2_note": table2_note(),
        })),
        Format::Csv | Format::Text => format!("{}\n{}", table1_csv(), table2_csv(true)),
    })
}

fn parse_classes(group: GroupKind, items: &[String]) -> Result<Vec<ClassLabel>, Failure> {
    items
        .iter()
        .map(|s| ClassLabel::parse_in(s, group).map_err(Failure::from))
        .collect()
}

fn cmd_singular(group: &str, n: u32, classes: &[String], cfg: &Config, format: Format) -> Out {
    let group: GroupKind = group.parse()?;
    let seeds = parse_classes(group, classes)?;
    let spec = build_connecting(group, n, &seeds)?;
    let v = verdict(&spec, cfg)?;
    Ok(match format {
        Format::Json => pretty(&v.to_json()),
        Format::Csv => {
            let mut s = String::from("eigenvalue,multiplicity\n");
            for e in &v.spectrum {
                writeln!(s, "{},{}", e.eigenvalue, e.multiplicity).unwrap();
            }
            s
        }
        Format::Text => {
            let names: Vec<String> = v.classes.iter().map(|c| c.to_string()).collect();
            let mut s = format!(
                "Cay({group}_{n}, {}) with |H| = {}\ngenerates: {}\nsingular: {}\n",
                names.join(" "),
                spec.total_size,
                v.generates,
                v.singular
            );
            if let Some(chi) = &v.certificate {
                writeln!(s, "certificate: {chi}").unwrap();
            }
            writeln!(s, "nullity: {}\nspectrum:", v.nullity).unwrap();
            for e in &v.spectrum {
                writeln!(s, "  {} x{}", e.eigenvalue, e.multiplicity).unwrap();
            }
            s
        }
    })
}

fn cmd_vanishing(group: &str, n: u32, class: Option<&str>, cfg: &Config, format: Format) -> Out {
    let group: GroupKind = group.parse()?;
    if let Some(class) = class {
        let cls = ClassLabel::parse_in(class, group)?;
        let verdict = vanishing_certificate(group, n, &cls, cfg)?;
        return Ok(match format {
            Format::Json => pretty(&json!({ "group": group, "n": n, "class": cls, "result": verdict })),
            Format::Csv => {
                let (kind, chi) = match verdict.certificate() {
                    Some(c) => (
                        serde_json::to_value(c.kind).unwrap().as_str().unwrap().to_string(),
                        c.character.as_ref().map(|x| x.to_string()).unwrap_or_default(),
                    ),
                    None => (String::new(), String::new()),
                };
                format!(
                    "group,n,class,verdict,kind,character\n{group},{n},\"{cls}\",{},{kind},\"{chi}\"\n",
                    verdict_name(&verdict)
                )
            }
            Format::Text => match &verdict {
                Vanishing::Vanishing { certificate } => {
                    let mut s = format!("{cls} is vanishing in {group}_{n}\n");
                    if let Some(chi) = &certificate.character {
                        writeln!(s, "character: {chi}").unwrap();
                    }
                    if let Some(b) = &certificate.block {
                        writeln!(
                            s,
                            "block: p = {}, core {}, weight {}, defect support {}",
                            b.p, b.core, b.weight, b.defect_support
                        )
                        .unwrap();
                    }
                    s
                }
                Vanishing::NonVanishing => format!("{cls} is non-vanishing in {group}_{n}\n"),
                Vanishing::Unknown => format!("{cls}: no certificate found in {group}_{n}\n"),
            },
        });
    }
    let list = nonvanishing_classes(group, n, cfg)?;
    Ok(match format {
        Format::Json => pretty(&json!({ "group": group, "n": n, "nonvanishing": list })),
        Format::Csv => {
            let mut s = String::from("group,n,class,order\n");
            for c in &list {
                let order = singcay::groups::element_order(&c.cycle_type);
                writeln!(s, "{group},{n},\"{c}\",{order}").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("non-vanishing classes of {group}_{n}:\n");
            for c in &list {
                let order = singcay::groups::element_order(&c.cycle_type);
                writeln!(s, "  {c} (order {order})").unwrap();
            }
            s
        }
    })
}

fn verdict_name(v: &Vanishing) -> &'static str {
    match v {
        Vanishing::Vanishing { .. } => "vanishing",
        Vanishing::NonVanishing => "non_vanishing",
        Vanishing::Unknown => "unknown",
    }
}

fn parse_range(s: &str) -> Result<Option<std::ops::RangeInclusive<u32>>, Failure> {
    let bad = || Failure::Usage(format!("bad range `{s}` (use 7..14, 7..=14, 11 or default)"));
    let s = s.trim();
    if s == "default" {
        return Ok(None);
    }
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        return Ok(Some(num(a)?..=num(b)?));
    }
    let n = num(s)?;
    Ok(Some(n..=n))
}

fn cmd_verify(check: &str, range: &str, cfg: &Config, format: Format) -> Out {
    let ids: Vec<CheckId> = if check.eq_ignore_ascii_case("all") {
        CheckId::ALL.to_vec()
    } else {
        vec![check.parse()?]
    };
    let range = parse_range(range)?;
    let jobs: Vec<(CheckId, u32)> = ids
        .iter()
        .flat_map(|&id| range.clone().unwrap_or_else(|| id.range()).map(move |n| (id, n)))
        .collect();
    let reports = run_jobs(&jobs, cfg)?;
    let ok = reports.iter().all(|r| r.status.is_ok());
    let out = match format {
        Format::Json => pretty(&Value::Array(reports.iter().map(|r| r.to_json()).collect())),
        Format::Csv => {
            let mut s = String::from("check_id,n,status,witnesses,counterexamples\n");
            for r in &reports {
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.check_id,
                    r.n,
                    r.status,
                    r.witnesses.len(),
                    r.counterexamples().count()
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(
                    s,
                    "{:<7} n={:<3} {:<16} {} witnesses, {} counterexamples",
                    r.check_id,
                    r.n,
                    r.status.to_string(),
                    r.witnesses.len(),
                    r.counterexamples().count()
                )
                .unwrap();
                for w in r.counterexamples() {
                    writeln!(
                        s,
                        "    {} {}: {}",
                        w.group,
                        w.class,
                        w.counterexample.as_deref().unwrap_or_default()
                    )
                    .unwrap();
                }
                for note in &r.notes {
                    writeln!(s, "    note: {note}").unwrap();
                }
            }
            writeln!(s, "{}", if ok { "all checks passed" } else { "some checks FAILED" }).unwrap();
            s
        }
    };
    print!("{out}");
    if ok {
        Ok(String::new())
    } else {
        Err(Failure::Checks)
    }
}
