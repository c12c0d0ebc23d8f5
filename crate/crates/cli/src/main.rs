//! Command line interface over the sylvester toolkit: tree symbols,
//! class enumeration, Hopf algebra products, hook formulas, orders,
//! graded graphs, and the self-verification suites.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sylv_core::{
    canonical_perm, canonical_word, class_size, enumerate_shapes, f_coproduct, f_product,
    g_product, p_coproduct, p_product, p_symbol, p_to_f, parse_tree, path_count_total,
    postfix_reading, principal_specialization, q_dual_product, q_hook_formula, q_symbol,
    run_suite, shape_class, sylvester_equivalent, tree_order_hasse, word_class, ClassMethod,
    GradedGraphPair, LabeledTree, Letter, Permutation, Suite, TreeShape, Word,
};

use crate::render::render_tree;

const DOT_HINT: &str = "dot output is only available for the order and graphs commands";

#[derive(Parser)]
#[command(
    name = "sylv",
    version,
    about = "Sylvester classes, binary search tree symbols, and the algebra of planar binary trees"
)]
struct Cli {
    /// Output format; dot applies to order and graphs only.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Rewriting,
    Oracle,
}

impl From<MethodArg> for ClassMethod {
    fn from(m: MethodArg) -> ClassMethod {
        match m {
            MethodArg::Rewriting => ClassMethod::Rewriting,
            MethodArg::Oracle => ClassMethod::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum BasisArg {
    P,
    Q,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum CoBasisArg {
    P,
    F,
}

#[derive(Subcommand)]
enum Command {
    /// Binary search tree of a word, built by leaf insertion from the right.
    PSymbol {
        /// Lowercase letters ("bacaabca"), comma separated letter ranks
        /// ("1,0,2"), or digits for a permutation ("51723684").
        word: String,
    },
    /// Decreasing tree recording the insertion order of a word.
    QSymbol {
        /// Word or permutation, as for p-symbol.
        word: String,
    },
    /// Standardization of a word.
    Std {
        /// Word or permutation, as for p-symbol.
        word: String,
    },
    /// Canonical (lexicographically minimal) member of a sylvester class.
    Canonical {
        /// A word or permutation, a labeled tree like "((. a .) b .)", or a
        /// shape like "((. * .) * .)".
        input: String,
    },
    /// Whether two words are sylvester equivalent.
    Equiv {
        left: String,
        right: String,
    },
    /// Every member of a sylvester class.
    Class {
        /// A word or permutation, a labeled tree, or a shape (the class of
        /// standardized words with that symbol shape).
        input: String,
        /// How to enumerate: oriented rewriting closure, or filtering all rearrangements.
        #[arg(long, value_enum, default_value = "rewriting")]
        method: MethodArg,
    },
    /// Product of two basis elements.
    Product {
        /// P and Q take tree shapes; F and G take permutations.
        #[arg(long, value_enum, ignore_case = true)]
        basis: BasisArg,
        x: String,
        y: String,
        /// Alphabet size for the Q basis projection (default: the product degree).
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Coproduct of a basis element.
    Coproduct {
        /// P takes a tree shape; F takes a permutation.
        #[arg(long, value_enum, ignore_case = true)]
        basis: CoBasisArg,
        x: String,
    },
    /// Sylvester class size of a shape by the hook formula, or its q-analogue.
    Hook {
        /// Tree shape like "(. * (. * .))".
        tree: String,
        /// Print the q-hook polynomial instead of the class size.
        #[arg(long)]
        q: bool,
    },
    /// Principal specialization of every P basis element of one degree.
    Specialize {
        /// Number of tree nodes.
        #[arg(long)]
        degree: usize,
        /// Truncation degree for the series check (default: the maximal exponent).
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Hasse diagram of the order on tree shapes with n nodes.
    Order {
        #[arg(long)]
        n: usize,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// The pair of dual graded graphs on tree shapes, levels 0 through n.
    Graphs {
        #[arg(long)]
        n: usize,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Run the self-check suites and report one line per criterion.
    Verify {
        /// One of: all, example, congruence, canonical, product, hook,
        /// duality, cauchy, intervals, graphs.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap the exhaustive search size (each criterion has its own default).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// ASCII drawing of a tree.
    Render {
        /// A tree shape or a labeled tree.
        tree: String,
    },
}

/// A word argument: lowercase letters, comma separated letter ranks, or a
/// digit string read as a permutation in one-line notation.
enum WordArg {
    Plain(Word),
    Standardized(Permutation),
}

impl WordArg {
    fn word(&self) -> Word {
        match self {
            WordArg::Plain(w) => w.clone(),
            WordArg::Standardized(p) => p.to_word(),
        }
    }
}

fn parse_word_arg(s: &str) -> Result<WordArg, String> {
    let s = s.trim();
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
        if let Ok(p) = s.parse::<Permutation>() {
            return Ok(WordArg::Standardized(p));
        }
    }
    s.parse::<Word>()
        .map(WordArg::Plain)
        .map_err(|e| e.to_string())
}

/// A positional argument that may be a shape, a labeled tree, a word, or a
/// permutation.
enum Input {
    Shape(TreeShape),
    Labeled(LabeledTree),
    Word(Word),
    Perm(Permutation),
}

fn parse_input(s: &str) -> Result<Input, String> {
    let s = s.trim();
    if s == "." || s.starts_with('(') {
        if let Ok(shape) = parse_tree::<()>(s) {
            return Ok(Input::Shape(shape));
        }
        return parse_tree::<Letter>(s)
            .map(Input::Labeled)
            .map_err(|e| e.to_string());
    }
    Ok(match parse_word_arg(s)? {
        WordArg::Plain(w) => Input::Word(w),
        WordArg::Standardized(p) => Input::Perm(p),
    })
}

/// The canonical word of a class of standardized words, as a permutation.
fn restandardize(w: &Word) -> Result<Permutation, String> {
    Permutation::try_from_word(w).map_err(|e| e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.trim().parse::<Permutation>().map_err(|e| e.to_string())
}

fn parse_shape(s: &str) -> Result<TreeShape, String> {
    match parse_input(s)? {
        Input::Shape(t) => Ok(t),
        Input::Labeled(t) => Ok(t.shape()),
        Input::Word(_) | Input::Perm(_) => Err("expected a tree, got a word".into()),
    }
}

/// Prints `text` or `json` depending on the format; dot is rejected.
fn emit(format: Format, text: String, json: Value) -> Result<(), String> {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
        Format::Dot => return Err(DOT_HINT.into()),
    }
    Ok(())
}

fn tensor_json<K, F: Fn(&K) -> Value>(
    terms: &std::collections::BTreeMap<(K, K), i64>,
    part: F,
) -> Value
where
    K: Ord,
{
    Value::Array(
        terms
            .iter()
            .map(|((l, r), c)| json!({ "left": part(l), "right": part(r), "coeff": c }))
            .collect(),
    )
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::PSymbol { word } => match parse_word_arg(&word)? {
            WordArg::Plain(w) => {
                let p = p_symbol(&w);
                emit(format, p.to_string(), p.to_json())?;
            }
            WordArg::Standardized(sigma) => {
                let p = p_symbol(&sigma.to_word()).map(&mut |l| l.rank() as usize);
                emit(format, p.to_string(), p.to_json())?;
            }
        },
        Command::QSymbol { word } => {
            let q = q_symbol(&parse_word_arg(&word)?.word());
            emit(format, q.to_string(), q.to_json())?;
        }
        Command::Std { word } => {
            let sigma = parse_word_arg(&word)?.word().standardize();
            emit(format, sigma.to_string(), sigma.to_json())?;
        }
        Command::Canonical { input } => match parse_input(&input)? {
            Input::Shape(t) => {
                let sigma = canonical_perm(&t);
                emit(format, sigma.to_string(), sigma.to_json())?;
            }
            Input::Labeled(t) => {
                if !t.is_bst() {
                    return Err("the labeled tree is not a binary search tree".into());
                }
                let w = postfix_reading(&t);
                emit(format, w.to_string(), w.to_json())?;
            }
            Input::Word(w) => {
                let c = canonical_word(&w);
                emit(format, c.to_string(), c.to_json())?;
            }
            Input::Perm(p) => {
                let sigma = restandardize(&canonical_word(&p.to_word()))?;
                emit(format, sigma.to_string(), sigma.to_json())?;
            }
        },
        Command::Equiv { left, right } => {
            let same = sylvester_equivalent(
                &parse_word_arg(&left)?.word(),
                &parse_word_arg(&right)?.word(),
            );
            emit(
                format,
                same.to_string(),
                json!({ "left": left.trim(), "right": right.trim(), "equivalent": same }),
            )?;
        }
        Command::Class { input, method } => match parse_input(&input)? {
            Input::Shape(t) => {
                let members = shape_class(&t, method.into()).map_err(|e| e.to_string())?;
                let text: Vec<String> = members.iter().map(Permutation::to_string).collect();
                let json = Value::Array(members.iter().map(Permutation::to_json).collect());
                emit(format, text.join("\n"), json)?;
            }
            Input::Labeled(t) => {
                let members = word_class(&postfix_reading(&t), method.into())
                    .map_err(|e| e.to_string())?;
                let text: Vec<String> = members.iter().map(Word::to_string).collect();
                let json = Value::Array(members.iter().map(Word::to_json).collect());
                emit(format, text.join("\n"), json)?;
            }
            Input::Word(w) => {
                let members = word_class(&w, method.into()).map_err(|e| e.to_string())?;
                let text: Vec<String> = members.iter().map(Word::to_string).collect();
                let json = Value::Array(members.iter().map(Word::to_json).collect());
                emit(format, text.join("\n"), json)?;
            }
            Input::Perm(p) => {
                let members = word_class(&p.to_word(), method.into())
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(restandardize)
                    .collect::<Result<Vec<_>, _>>()?;
                let text: Vec<String> = members.iter().map(Permutation::to_string).collect();
                let json = Value::Array(members.iter().map(Permutation::to_json).collect());
                emit(format, text.join("\n"), json)?;
            }
        },
        Command::Product {
            basis,
            x,
            y,
            alphabet,
        } => {
            if alphabet.is_some() && basis != BasisArg::Q {
                return Err("--alphabet only applies to the Q basis".into());
            }
            match basis {
                BasisArg::P => {
                    let prod = p_product(&parse_shape(&x)?, &parse_shape(&y)?);
                    emit(format, prod.to_string(), prod.to_json())?;
                }
                BasisArg::Q => {
                    let (t1, t2) = (parse_shape(&x)?, parse_shape(&y)?);
                    let m = alphabet.unwrap_or((t1.len() + t2.len()).max(1) as u32);
                    let prod = q_dual_product(&t1, &t2, m).map_err(|e| e.to_string())?;
                    emit(format, prod.to_string(), prod.to_json())?;
                }
                BasisArg::F => {
                    let prod = f_product(&parse_perm(&x)?, &parse_perm(&y)?);
                    emit(format, prod.to_string(), prod.to_json())?;
                }
                BasisArg::G => {
                    let prod = g_product(&parse_perm(&x)?, &parse_perm(&y)?);
                    emit(format, prod.to_string(), prod.to_json())?;
                }
            }
        }
        Command::Coproduct { basis, x } => match basis {
            CoBasisArg::P => {
                let cop = p_coproduct(&parse_shape(&x)?).map_err(|e| e.to_string())?;
                let json = tensor_json(cop.terms(), |t: &TreeShape| Value::String(t.to_string()));
                emit(format, cop.to_string(), json)?;
            }
            CoBasisArg::F => {
                let cop = f_coproduct(&parse_perm(&x)?);
                let json = tensor_json(cop.terms(), Permutation::to_json);
                emit(format, cop.to_string(), json)?;
            }
        },
        Command::Hook { tree, q } => {
            let t = parse_shape(&tree)?;
            if q {
                let poly = q_hook_formula(&t).map_err(|e| e.to_string())?;
                emit(format, poly.to_string(), poly.to_json())?;
            } else {
                let size = class_size(&t);
                emit(
                    format,
                    size.to_string(),
                    json!({ "shape": t.to_string(), "size": size }),
                )?;
            }
        }
        Command::Specialize { degree, cutoff } => {
            let cutoff = cutoff.unwrap_or(degree.saturating_sub(1) * degree / 2);
            let mut lines = Vec::new();
            let mut entries = Vec::new();
            for t in enumerate_shapes(degree) {
                let poly = principal_specialization(&p_to_f(&t), cutoff)
                    .map_err(|e| e.to_string())?;
                lines.push(format!("P[{t}] -> {poly}"));
                entries.push(json!({ "shape": t.to_string(), "poly": poly.to_json() }));
            }
            emit(format, lines.join("\n"), Value::Array(entries))?;
        }
        Command::Order { n, dot } => {
            let edges = tree_order_hasse(n).map_err(|e| e.to_string())?;
            let format = if dot { Format::Dot } else { format };
            match format {
                Format::Text => {
                    for (a, b) in &edges {
                        println!("{a} -> {b}");
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = edges
                        .iter()
                        .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                        .collect();
                    println!("{}", json!({ "n": n, "edges": list }));
                }
                Format::Dot => {
                    let mut out =
                        String::from("digraph order {\n  rankdir=BT;\n  node [shape=box];\n");
                    for (a, b) in &edges {
                        out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
                    }
                    out.push('}');
                    println!("{out}");
                }
            }
        }
        Command::Graphs { n, dot } => {
            let pair = GradedGraphPair::build(n).map_err(|e| e.to_string())?;
            let format = if dot { Format::Dot } else { format };
            match format {
                Format::Dot => println!("{}", pair.to_dot()),
                Format::Json => println!("{}", pair.to_json()),
                Format::Text => {
                    let report = pair.duality_report();
                    let total = path_count_total(&pair.path_counts(n));
                    let bang: u64 = (1..=n as u64).product();
                    let sizes: Vec<String> =
                        (0..=n).map(|k| pair.level(k).len().to_string()).collect();
                    println!("graded graphs on tree shapes, levels 0..={n}");
                    println!("level sizes: {}", sizes.join(", "));
                    println!(
                        "duality DU - UD = I: {} through level {} ({})",
                        if report.ok { "holds" } else { "FAILS" },
                        report.levels_checked,
                        report.orientation
                    );
                    if let Some((k, a, b)) = &report.counterexample {
                        println!("counterexample at level {k}: ({a}, {b})");
                    }
                    println!("paths to level {n}: sum of f * f_star = {total}, {n}! = {bang}");
                    if !report.ok || total != bang {
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        Command::Verify { suite, max_n } => {
            let parsed = Suite::parse(&suite).ok_or_else(|| {
                format!(
                    "unknown suite {suite:?} (expected one of: {})",
                    Suite::names().join(", ")
                )
            })?;
            let reports = run_suite(parsed, max_n);
            let failed = reports.iter().any(|r| !r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        println!("{}", r.line());
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = reports
                        .iter()
                        .map(|r| {
                            json!({
                                "id": r.id,
                                "name": r.name,
                                "passed": r.passed,
                                "detail": r.detail,
                                "millis": r.millis,
                            })
                        })
                        .collect();
                    println!("{}", Value::Array(list));
                }
                Format::Dot => return Err(DOT_HINT.into()),
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { tree } => {
            let ascii = match parse_input(&tree)? {
                Input::Shape(t) => render_tree(&t),
                Input::Labeled(t) => render_tree(&t),
                Input::Word(_) | Input::Perm(_) => {
                    return Err("render expects a tree; use p-symbol to turn a word into one".into())
                }
            };
            emit(format, ascii.clone(), json!({ "ascii": ascii }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Dies quietly when the consumer closes the pipe, like other line tools.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
