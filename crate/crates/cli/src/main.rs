use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sechom::cross::{h0, h1, CrossObject, H0, H1};
use sechom::functors::{ad1, ad2, ad3, adjunction_check, fiber, phi, six_term_sequence, SixTerm};
use sechom::models::{circle_comparison, homotopy_groups, k_invariant, suspension_comparison, wedge_model, Comparison};
use sechom::nil2::PointedSet;
use sechom::text::{parse, print, Document, Value};
use sechom::tracks::{interchange_check, HopfTrack, TwoMorphism};
use sechom::verify::acceptance::{run_selected, Config, CRITERIA};
use sechom::{Error, Result};

#[derive(Parser)]
#[command(name = "sechom", version, about = "Class-2 groups, crossed and quadratic modules and models of wedges of spheres")]
struct Cli {
    /// Coset enumeration limit when h0 is presented over a free group.
    #[arg(long, global = true, env = "SECHOM_COSET_CAP", default_value_t = sechom::cross::COSET_CAP)]
    coset_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Document to read; `-` for standard input.
    file: String,
    /// Block to act on; defaults to the last block of the right kind.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of every cross block (or one of them).
    Check(Input),
    /// Compute h0 = coker ∂.
    H0(Input),
    /// Compute h1 = ker ∂.
    H1(Input),
    /// π_n and π_(n+1) of a model.
    HomotopyGroups(Input),
    /// The fiber of a morphism, as a document.
    Fiber(Input),
    /// Exactness of the six-term sequence of a morphism's fiber.
    SixTerm(Input),
    /// Apply φ_n to a level-n object.
    Phi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u32,
    },
    /// Apply Ad_n to a level-(n-1) object.
    Ad {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u32,
    },
    /// Compare Hom(Ad_n X, Y) with Hom(X, φ_n Y) by enumeration.
    AdjointCheck {
        file: String,
        #[arg(long)]
        n: u32,
        /// Level n-1 object.
        #[arg(long)]
        source: String,
        /// Level n object.
        #[arg(long)]
        target: String,
        /// Limit on candidate assignments per hom-set.
        #[arg(long, env = "SECHOM_ENUM_CAP", default_value_t = sechom::functors::ENUMERATION_CAP)]
        cap: u64,
    },
    /// Print the model of a wedge of n-spheres indexed by the given generators.
    Wedge {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        gens: Vec<String>,
        #[arg(long, default_value = "W")]
        name: String,
    },
    /// The k-invariant Γ_n(h0) → h1 of a quadratic module.
    KInvariant(Input),
    /// Compare the stabilized level-2 wedge model with the level-3 one, and level 2 with Ad_2 of level 1.
    SuspendCompare {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        gens: Vec<String>,
    },
    /// Compose tracks or 2-morphisms and print the result.
    Paste {
        file: String,
        /// Names composed vertically, first to last.
        #[arg(long, value_delimiter = ',', conflicts_with = "horizontal")]
        vertical: Vec<String>,
        /// Names composed horizontally, first to last.
        #[arg(long, value_delimiter = ',')]
        horizontal: Vec<String>,
        /// With two horizontally composable 2-morphisms, also test the interchange law.
        #[arg(long)]
        interchange: bool,
        #[arg(long, default_value = "P")]
        out: String,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = Config::default().seed)]
        seed: u64,
        /// Criterion numbers to run; all by default.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

/// A finished command: its report and whether it found a verified negative.
struct Report {
    text: String,
    negative: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, negative: false }
    }
}

fn read(file: &str) -> Result<Document> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Invalid(format!("stdin: {}", e)))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Invalid(format!("{}: {}", file, e)))?
    };
    parse(&text)
}

fn pick(doc: &Document, name: &Option<String>, kind: &str) -> Result<String> {
    match name {
        Some(n) => Ok(n.clone()),
        None => doc.names_of(kind).pop().ok_or_else(|| Error::Invalid(format!("no {} block in the document", kind))),
    }
}

fn load_cross(input: &Input) -> Result<(Document, String, CrossObject)> {
    let doc = read(&input.file)?;
    let name = pick(&doc, &input.name, "cross")?;
    let x = doc.cross(&name)?.clone();
    Ok((doc, name, x))
}

fn gens(g: &[String]) -> Result<PointedSet> {
    PointedSet::from_strings("*".into(), g.iter().filter(|s| !s.is_empty()).cloned().collect())
}

fn describe_h0(x: &CrossObject, cap: usize) -> Result<String> {
    Ok(match h0(x)? {
        H0::Classes(c) => {
            let g = x.as_groupoid()?;
            let classes: Vec<String> = c
                .iter()
                .map(|cl| format!("{{{}}}", cl.iter().map(|&i| g.object_name(i).to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            format!("{} isomorphism classes: {}", c.len(), classes.join(" "))
        }
        H0::Group(q) => q.group.describe(),
        H0::Presented(p) => match p.free_rank_if_free() {
            Some(r) => format!("free group of rank {}", r),
            None => {
                let t = p.enumerate(cap)?;
                let g = t.to_group();
                format!(
                    "finite group of order {} ({}), abelianization {}",
                    t.order(),
                    if g.is_abelian() { "abelian" } else { "non-abelian" },
                    g.abelianization().describe()
                )
            }
        },
    })
}

fn describe_h1(x: &CrossObject) -> Result<String> {
    Ok(match h1(x)? {
        H1::Automorphisms(g) => format!("Aut(*) of order {}, abelianization {}", g.order(), g.abelianization().describe()),
        h => h.describe(),
    })
}

fn check(input: &Input) -> Result<Report> {
    let doc = read(&input.file)?;
    let names = match &input.name {
        Some(n) => vec![n.clone()],
        None => doc.names_of("cross"),
    };
    let mut out = String::new();
    let mut negative = false;
    for n in &names {
        let v = doc.cross(n)?.check_axioms();
        if v.is_empty() {
            let _ = writeln!(out, "{}: ok", n);
        } else {
            negative = true;
            for x in v {
                let _ = writeln!(out, "{}: {}", n, x);
            }
        }
    }
    for n in doc.names_of("track") {
        if doc.track(&n)?.is_valid() {
            let _ = writeln!(out, "{}: ok", n);
        } else {
            negative = true;
            let _ = writeln!(out, "{}: the boundary of alpha does not carry f to g", n);
        }
    }
    if out.is_empty() {
        out.push_str("nothing to check\n");
    }
    Ok(Report { text: out, negative })
}

fn report_six_term(s: &SixTerm) -> Report {
    let mut out = String::new();
    for (joint, ok) in SixTerm::joints().iter().zip(s.exact) {
        let _ = writeln!(out, "{:<7} {}", joint, if ok { "exact" } else { "NOT exact" });
    }
    Report { text: out, negative: !s.is_exact() }
}

fn phi_cmd(input: &Input, n: u32) -> Result<Report> {
    let (_, name, x) = load_cross(input)?;
    if x.level() != n {
        return Err(Error::Invalid(format!("`{}` lives at level {}, not {}", name, x.level(), n)));
    }
    let y = phi(&x)?;
    let out_name = format!("phi_{}", name);
    if let CrossObject::Groupoid(g) = &y {
        let mut out = format!("# {}: groupoid with {} objects and {} arrows\n", out_name, g.nobjects(), g.arrows().len());
        let _ = writeln!(out, "# h0: {}", describe_h0(&y, 0)?);
        let _ = writeln!(out, "# h1: {}", describe_h1(&y)?);
        return Ok(Report::ok(out));
    }
    let mut doc = Document::new();
    doc.add_cross(&out_name, &y)?;
    Ok(Report::ok(print(&doc)))
}

fn ad_cmd(input: &Input, n: u32, cap: usize) -> Result<Report> {
    let doc = read(&input.file)?;
    if n == 1 {
        let name = pick(&doc, &input.name, "groupoid")?;
        let a = ad1(doc.groupoid(&name)?);
        let mut out = format!("# Ad_1 {}: free crossed module on {} arrows\n", name, a.groupoid.arrows().len());
        let p = a.h0_presentation();
        let h0 = match p.free_rank_if_free() {
            Some(r) => format!("free group of rank {}", r),
            None => format!("order {}", p.enumerate(cap)?.order()),
        };
        let _ = writeln!(out, "# h0: {}", h0);
        let show = |g: Option<sechom::FinAbGroup>| g.map_or("not abelian".to_string(), |g| g.describe());
        let _ = writeln!(out, "# h1: {}", show(a.h1_computed()));
        return Ok(Report::ok(out));
    }
    let name = pick(&doc, &input.name, "cross")?;
    let x = doc.cross(&name)?;
    let s = match (n, x) {
        (2, CrossObject::Crossed(c)) => ad2(c)?,
        (3, CrossObject::Quadratic(q)) if q.level == 2 => ad3(q)?,
        _ => return Err(Error::Invalid(format!("Ad_{} takes a level-{} object; `{}` lives at level {}", n, n - 1, name, x.level()))),
    };
    let mut out = Document::new();
    out.add_cross(&format!("Ad_{}", name), &CrossObject::Quadratic(s.module))?;
    Ok(Report::ok(print(&out)))
}

fn comparison_line(label: &str, c: &Comparison) -> String {
    format!(
        "{}: isomorphism {}, weak equivalence {}\n",
        label,
        if c.isomorphism { "yes" } else { "no" },
        if c.weak_equivalence { "yes" } else { "no" }
    )
}

enum Cell {
    Track(HopfTrack),
    Two(TwoMorphism),
}

fn cell(doc: &Document, name: &str) -> Result<Cell> {
    match doc.get(name) {
        Some(Value::Track { track, .. }) => Ok(Cell::Track(track.clone())),
        Some(Value::TwoMorphism { two, .. }) => Ok(Cell::Two(two.clone())),
        Some(_) => Err(Error::Invalid(format!("`{}` is neither a track nor a 2-morphism", name))),
        None => Err(Error::UnknownName(name.into())),
    }
}

fn paste(file: &str, vertical: &[String], horizontal: &[String], interchange: bool, out: &str) -> Result<Report> {
    let doc = read(file)?;
    let (names, vert) = if !vertical.is_empty() { (vertical, true) } else { (horizontal, false) };
    if names.is_empty() {
        return Err(Error::Invalid("give --vertical or --horizontal".into()));
    }
    let cells = names.iter().map(|n| cell(&doc, n)).collect::<Result<Vec<_>>>()?;
    let mut res = Document::new();
    let mut text = String::new();
    let mut negative = false;
    match &cells[0] {
        Cell::Track(first) => {
            let mut acc = first.clone();
            for c in &cells[1..] {
                let Cell::Track(t) = c else { return Err(Error::Invalid("cannot mix tracks and 2-morphisms".into())) };
                acc = if vert { acc.vcomp(t)? } else { acc.hcomp(t)? };
            }
            res.add_track(out, &acc);
        }
        Cell::Two(first) => {
            let mut acc = first.clone();
            for c in &cells[1..] {
                let Cell::Two(t) = c else { return Err(Error::Invalid("cannot mix tracks and 2-morphisms".into())) };
                acc = if vert { acc.vcomp(t)? } else { acc.hcomp(t)? };
            }
            if interchange {
                let (Some(Cell::Two(a)), Some(Cell::Two(b)), 2) = (cells.first(), cells.get(1), cells.len()) else {
                    return Err(Error::Invalid("--interchange takes two horizontally composable 2-morphisms".into()));
                };
                let holds = interchange_check(a, b)?;
                negative = !holds;
                let _ = writeln!(text, "# interchange law {}", if holds { "holds" } else { "FAILS" });
            }
            res.add_two_morphism(out, &acc)?;
        }
    }
    text.push_str(&print(&res));
    Ok(Report { text, negative })
}

fn selftest(jobs: usize, seed: u64, only: &[usize]) -> Result<Report> {
    let ids: Vec<usize> = if only.is_empty() { (1..=CRITERIA.len()).collect() } else { only.to_vec() };
    if let Some(&bad) = ids.iter().find(|&&i| i == 0 || i > CRITERIA.len()) {
        return Err(Error::Invalid(format!("no criterion {}", bad)));
    }
    let outcomes = run_selected(&Config { seed, jobs }, &ids);
    let mut out = String::new();
    for o in &outcomes {
        let _ = writeln!(out, "{}", o.line());
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(out, "{}/{} criteria passed", passed, outcomes.len());
    Ok(Report { text: out, negative: passed != outcomes.len() })
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let cap = cli.coset_cap;
    match &cli.command {
        Command::Check(input) => check(input),
        Command::H0(input) => {
            let (_, name, x) = load_cross(input)?;
            Ok(Report::ok(format!("h0({}) = {}\n", name, describe_h0(&x, cap)?)))
        }
        Command::H1(input) => {
            let (_, name, x) = load_cross(input)?;
            Ok(Report::ok(format!("h1({}) = {}\n", name, describe_h1(&x)?)))
        }
        Command::HomotopyGroups(input) => {
            let (_, name, x) = load_cross(input)?;
            let g = homotopy_groups(&x)?;
            let n = x.level();
            Ok(Report::ok(format!(
                "# {}: {}\npi_{} = {}\npi_{} = {}\n",
                name,
                g.provenance,
                n,
                describe_h0(&x, cap)?,
                n + 1,
                describe_h1(&x)?
            )))
        }
        Command::Fiber(input) => {
            let doc = read(&input.file)?;
            let name = pick(&doc, &input.name, "morphism")?;
            let fr = fiber(doc.morphism(&name)?)?;
            let mut out = Document::new();
            out.add_morphism(&format!("j_{}", name), &fr.j)?;
            Ok(Report::ok(print(&out)))
        }
        Command::SixTerm(input) => {
            let doc = read(&input.file)?;
            let name = pick(&doc, &input.name, "morphism")?;
            let fr = fiber(doc.morphism(&name)?)?;
            Ok(report_six_term(&six_term_sequence(&fr)?))
        }
        Command::Phi { input, n } => phi_cmd(input, *n),
        Command::Ad { input, n } => ad_cmd(input, *n, cap),
        Command::AdjointCheck { file, n, source, target, cap } => {
            let doc = read(file)?;
            let r = adjunction_check(*n, doc.cross(source)?, doc.cross(target)?, *cap)?;
            let text = format!(
                "|Hom(Ad_{n} {s}, {t})| = {}\n|Hom({s}, phi_{n} {t})| = {}\nunit bijective: {}\ntriangle identity: {}\n",
                r.left,
                r.right,
                r.unit_bijective,
                r.triangle,
                n = n,
                s = source,
                t = target
            );
            Ok(Report { text, negative: !r.passed() })
        }
        Command::Wedge { n, gens: g, name } => {
            let mut doc = Document::new();
            doc.add_cross(name, &wedge_model(*n, &gens(g)?)?)?;
            Ok(Report::ok(print(&doc)))
        }
        Command::KInvariant(input) => {
            let (_, name, x) = load_cross(input)?;
            let k = k_invariant(&x)?;
            let mut out = format!("k_{}({}): Γ(h0) → h1\n", k.n, name);
            for row in k.map.matrix.row_vecs() {
                let _ = writeln!(out, "  [{}]", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            let kind = if k.map.is_iso() {
                "isomorphism"
            } else if k.map.is_zero() {
                "zero"
            } else {
                "neither zero nor an isomorphism"
            };
            let _ = writeln!(out, "{}", kind);
            if let Some(s) = k.sign {
                let _ = writeln!(out, "sign {:+}", s);
            }
            Ok(Report::ok(out))
        }
        Command::SuspendCompare { gens: g } => {
            let e = gens(g)?;
            let s = suspension_comparison(&e)?;
            let c = circle_comparison(&e)?;
            let text = comparison_line("Ad_3(wedge 2) -> wedge 3", &s) + &comparison_line("wedge 2 -> Ad_2(wedge 1)", &c);
            Ok(Report { text, negative: !(s.isomorphism && c.isomorphism) })
        }
        Command::Paste { file, vertical, horizontal, interchange, out } => paste(file, vertical, horizontal, *interchange, out),
        Command::Selftest { jobs, seed, only } => selftest(*jobs, *seed, only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(if r.negative { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
