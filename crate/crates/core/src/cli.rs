//! Command-line front end.
//!
//! [`run`] takes its arguments and streams explicitly so the binary is a thin
//! wrapper and the whole surface can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::grammar::agree::check_grammar;
use crate::grammar::golden::{table1, table2};
use crate::grammar::{
    analysis, conjugate_verb, form_adverb, grade_adjective, inflect_adjective_phrase, inflect_noun, AdverbStrategy,
    Degree, FeatureError, Grammar, GrammarError, IzafaKind, NounFeatures, NounForm, Number, Person, PersonNumber,
    Tense, VerbFeatures, GRAMMAR_SOURCE, SEED_LEXICON,
};
use crate::lexicon::{parse_lexicon, PartOfSpeech};
use crate::rules::RuleSource;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LOAD: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Tsv,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Analyze,
    Generate,
}

impl Mode {
    fn prompt(self) -> &'static str {
        match self {
            Mode::Analyze => "analyze> ",
            Mode::Generate => "generate> ",
        }
    }

    fn toggled(self) -> Mode {
        match self {
            Mode::Analyze => Mode::Generate,
            Mode::Generate => Mode::Analyze,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sorani-fst",
    version,
    about = "Sorani Kurdish morphological analyzer and generator"
)]
pub struct Cli {
    /// Grammar source (.kfst); defaults to the built-in grammar.
    #[arg(long, global = true, value_name = "PATH")]
    pub grammar: Option<PathBuf>,
    /// Lexicon (TSV); defaults to the built-in seed lexicon.
    #[arg(long, global = true, value_name = "PATH")]
    pub lexicon: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze surface words (arguments, or one per line on stdin).
    Analyze { words: Vec<String> },
    /// Generate surface forms from analysis strings.
    Generate { analyses: Vec<String> },
    /// Interactive session; `:mode` switches direction, `:quit` exits.
    Repl {
        #[arg(long, value_enum, default_value_t = Mode::Analyze)]
        mode: Mode,
    },
    /// Inflect directly, without the compiled grammar.
    #[command(subcommand)]
    Inflect(InflectCommand),
    /// Run the golden sets and the grammar/oracle cross-check.
    Selftest,
    /// Write the compiled generator in text form.
    Compile {
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct NominalArgs {
    #[arg(long, default_value = "absolute")]
    pub form: String,
    #[arg(long, default_value = "sg")]
    pub number: String,
}

#[derive(Debug, Subcommand)]
pub enum InflectCommand {
    /// A noun form, e.g. `noun derga --form definite --number sg`.
    Noun {
        lemma: String,
        #[command(flatten)]
        features: NominalArgs,
    },
    /// A noun-adjective izafa phrase.
    Adj {
        noun: String,
        adjective: String,
        #[arg(long, default_value = "loose")]
        izafa: String,
        #[command(flatten)]
        features: NominalArgs,
    },
    /// Comparative or superlative of an adjective.
    Grade {
        adjective: String,
        #[arg(long, default_value = "comparative")]
        degree: String,
    },
    /// An adverb formed from a noun or adjective.
    Adverb {
        base: String,
        #[arg(long, default_value = "suffix-ane")]
        strategy: String,
    },
    /// A verb form; the lemma must be a verb in the lexicon.
    Verb {
        lemma: String,
        #[arg(long, default_value = "past")]
        tense: String,
        #[arg(long, default_value_t = 3)]
        person: u8,
        #[arg(long, default_value = "sg")]
        number: String,
        #[arg(long)]
        negated: bool,
        #[arg(long)]
        progressive: bool,
        #[arg(long)]
        subjunctive: bool,
        /// Object clitic as person and number, e.g. `2s`.
        #[arg(long)]
        object: Option<String>,
    },
}

/// Input/output streams for one invocation.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Load(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<FeatureError> for CliError {
    fn from(e: FeatureError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, io: &mut Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink = if code == 0 { &mut *io.stdout } else { &mut *io.stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli, io) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(io.stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Load(m)) => {
            let _ = writeln!(io.stderr, "error: {m}");
            EXIT_LOAD
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

/// Loads the lexicon and grammar named on the command line, falling back to
/// the built-in data.
pub fn load_grammar(grammar: Option<&Path>, lexicon: Option<&Path>) -> Result<Grammar, String> {
    let load = || -> Result<Grammar, CliError> {
        let (lex_name, lex_text) = match lexicon {
            Some(p) => (p.display().to_string(), read_source(p)?),
            None => ("seed.tsv".to_string(), SEED_LEXICON.to_string()),
        };
        let source = match grammar {
            Some(p) => RuleSource::new(p.display().to_string(), read_source(p)?),
            None => RuleSource::new("sorani.kfst", GRAMMAR_SOURCE),
        };
        let lex = parse_lexicon(&lex_text).map_err(|e| CliError::Load(format!("{lex_name}: {e}")))?;
        Grammar::build(lex, &source).map_err(|e| match e {
            GrammarError::Lexicon(e) => CliError::Load(format!("{lex_name}: {e}")),
            GrammarError::Rules(e) => CliError::Load(e.to_string()),
        })
    };
    load().map_err(|e| match e {
        CliError::Load(m) | CliError::Usage(m) => m,
        CliError::Io(e) => e.to_string(),
    })
}

fn execute(cli: &Cli, io: &mut Streams<'_>) -> Result<i32, CliError> {
    let grammar = load_grammar(cli.grammar.as_deref(), cli.lexicon.as_deref()).map_err(CliError::Load)?;
    for w in grammar.lexicon().warnings() {
        writeln!(io.stderr, "warning: {w}")?;
    }
    match &cli.command {
        Command::Analyze { words } => batch(&grammar, Mode::Analyze, words, cli.format, io),
        Command::Generate { analyses } => batch(&grammar, Mode::Generate, analyses, cli.format, io),
        Command::Repl { mode } => repl(&grammar, *mode, cli.format, io),
        Command::Inflect(cmd) => {
            let out = inflect(&grammar, cmd)?;
            writeln!(io.stdout, "{out}")?;
            Ok(EXIT_OK)
        }
        Command::Selftest => selftest(&grammar, io),
        Command::Compile { output } => {
            let text = grammar.generator().to_text();
            match output {
                Some(p) => fs::write(p, text)?,
                None => io.stdout.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Results for one input line. Warnings go to `stderr`.
fn lookup(grammar: &Grammar, mode: Mode, input: &str, stderr: &mut dyn Write) -> io::Result<Vec<String>> {
    match mode {
        Mode::Analyze if input.contains(char::is_whitespace) => {
            writeln!(
                stderr,
                "warning: {input:?} contains a space; analysis works on single words"
            )?;
            Ok(Vec::new())
        }
        Mode::Analyze => Ok(grammar.analyze(input)),
        Mode::Generate => match grammar.generate(input) {
            Ok(r) => Ok(r),
            Err(e) => {
                writeln!(stderr, "warning: {input:?}: {e}")?;
                Ok(Vec::new())
            }
        },
    }
}

fn emit(out: &mut dyn Write, format: OutputFormat, input: &str, results: &[String]) -> io::Result<()> {
    match format {
        OutputFormat::Plain if results.is_empty() => writeln!(out, "no result for \"{input}\""),
        OutputFormat::Plain => results.iter().try_for_each(|r| writeln!(out, "{r}")),
        OutputFormat::Tsv if results.is_empty() => writeln!(out, "{input}\t"),
        OutputFormat::Tsv => results.iter().try_for_each(|r| writeln!(out, "{input}\t{r}")),
        OutputFormat::JsonLines => writeln!(out, "{}", json!({ "input": input, "results": results })),
    }
}

fn batch(
    grammar: &Grammar,
    mode: Mode,
    args: &[String],
    format: OutputFormat,
    io: &mut Streams<'_>,
) -> Result<i32, CliError> {
    let process = |line: &str, io: &mut Streams<'_>| -> io::Result<()> {
        let input = line.trim();
        if input.is_empty() {
            return Ok(());
        }
        let results = lookup(grammar, mode, input, io.stderr)?;
        emit(io.stdout, format, input, &results)
    };
    if args.is_empty() {
        let mut line = String::new();
        while io.stdin.read_line(&mut line)? > 0 {
            process(&line, io)?;
            line.clear();
        }
    } else {
        for a in args {
            process(a, io)?;
        }
    }
    Ok(EXIT_OK)
}

fn repl(grammar: &Grammar, mut mode: Mode, format: OutputFormat, io: &mut Streams<'_>) -> Result<i32, CliError> {
    let mut line = String::new();
    loop {
        write!(io.stdout, "{}", mode.prompt())?;
        io.stdout.flush()?;
        line.clear();
        if io.stdin.read_line(&mut line)? == 0 {
            writeln!(io.stdout)?;
            return Ok(EXIT_OK);
        }
        let input = line.trim();
        match input.split_whitespace().collect::<Vec<_>>().as_slice() {
            [] => {}
            [":quit"] | [":q"] => return Ok(EXIT_OK),
            [":mode"] => mode = mode.toggled(),
            [":mode", "analyze"] => mode = Mode::Analyze,
            [":mode", "generate"] => mode = Mode::Generate,
            [cmd, ..] if cmd.starts_with(':') => {
                writeln!(io.stderr, "unknown command {input:?}; try :mode or :quit")?;
            }
            _ => {
                let results = lookup(grammar, mode, input, io.stderr)?;
                emit(io.stdout, format, input, &results)?;
            }
        }
    }
}

fn nominal(args: &NominalArgs) -> Result<NounFeatures, FeatureError> {
    NounFeatures::new(args.form.parse::<NounForm>()?, args.number.parse::<Number>()?)
}

fn inflect(grammar: &Grammar, cmd: &InflectCommand) -> Result<String, CliError> {
    Ok(match cmd {
        InflectCommand::Noun { lemma, features } => inflect_noun(lemma, nominal(features)?)?,
        InflectCommand::Adj {
            noun,
            adjective,
            izafa,
            features,
        } => inflect_adjective_phrase(noun, adjective, izafa.parse::<IzafaKind>()?, nominal(features)?)?,
        InflectCommand::Grade { adjective, degree } => grade_adjective(adjective, degree.parse::<Degree>()?)?,
        InflectCommand::Adverb { base, strategy } => form_adverb(base, strategy.parse::<AdverbStrategy>()?)?,
        InflectCommand::Verb {
            lemma,
            tense,
            person,
            number,
            negated,
            progressive,
            subjunctive,
            object,
        } => {
            let entry = grammar
                .lexicon()
                .get(lemma, PartOfSpeech::Verb)
                .ok_or_else(|| CliError::Usage(format!("{lemma:?} is not a verb in the lexicon")))?;
            let person = Person::from_number(*person)
                .ok_or_else(|| CliError::Usage(format!("person must be 1, 2 or 3, got {person}")))?;
            let features = VerbFeatures {
                tense: tense.parse::<Tense>()?,
                subject: PersonNumber::new(person, number.parse()?),
                negated: *negated,
                progressive: *progressive,
                subjunctive: *subjunctive,
                object: object.as_deref().map(str::parse).transpose()?,
            };
            conjugate_verb(entry, features)?
        }
    })
}

/// Tally of one selftest section.
struct Section {
    name: &'static str,
    passed: usize,
    failures: Vec<String>,
}

impl Section {
    fn new(name: &'static str) -> Self {
        Section {
            name,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(describe());
        }
    }
}

fn selftest(grammar: &Grammar, io: &mut Streams<'_>) -> Result<i32, CliError> {
    let mut nouns = Section::new("noun table");
    for case in table1() {
        let got = inflect_noun(&case.lemma, case.features)?;
        nouns.expect(got == case.expected, || {
            format!("{}: expected {:?}, got {got:?}", case.lemma, case.expected)
        });
        if case.features.form != NounForm::Demonstrative {
            let a = analysis::noun(&case.lemma, case.features);
            let generated = grammar.generate(&a).unwrap_or_default();
            let round_trip = generated == [case.expected.clone()] && grammar.analyze(&case.expected).contains(&a);
            nouns.expect(round_trip, || format!("{a}: grammar generates {generated:?}"));
        }
    }

    let mut phrases = Section::new("adjective phrase table");
    for case in table2() {
        let got = inflect_adjective_phrase(&case.noun, &case.adjective, case.kind, case.features)?;
        phrases.expect(got == case.expected, || {
            format!(
                "{} {}: expected {:?}, got {got:?}",
                case.noun, case.adjective, case.expected
            )
        });
    }

    let mut session = Section::new("session");
    let (word, parse) = ("xwardim", "xward<verb-transitive-past-stem><past-1s>");
    let analyses = grammar.analyze(word);
    session.expect(analyses == [parse], || format!("analyze {word}: {analyses:?}"));
    let generated = grammar.generate(parse).unwrap_or_default();
    session.expect(generated == [word], || format!("generate {parse}: {generated:?}"));

    let report = check_grammar(grammar);
    let mut agreement = Section::new("oracle agreement");
    agreement.passed = report.total_checks() - report.disagreements.len();
    agreement.failures = report.disagreements.iter().map(ToString::to_string).collect();

    let mut all_passed = true;
    for s in [nouns, phrases, session, agreement] {
        let total = s.passed + s.failures.len();
        writeln!(io.stdout, "{}: {}/{} passed", s.name, s.passed, total)?;
        for f in &s.failures {
            writeln!(io.stdout, "  FAIL {f}")?;
        }
        all_passed &= s.failures.is_empty();
    }
    writeln!(
        io.stdout,
        "{}",
        if all_passed {
            "selftest passed"
        } else {
            "selftest FAILED"
        }
    )?;
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("sorani-fst").chain(args.iter().copied()),
            &mut Streams {
                stdin: &mut stdin,
                stdout: &mut out,
                stderr: &mut err,
            },
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn analyze_arguments() {
        let (code, out, _) = run_with(&["analyze", "xwardim", "qqq"], "");
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "xward<verb-transitive-past-stem><past-1s>\nno result for \"qqq\"\n"
        );
    }

    #[test]
    fn interior_space_is_rejected_with_warning() {
        let (code, out, err) = run_with(&["--format", "tsv", "analyze"], "gułî ciwan\n");
        assert_eq!(code, 0);
        assert_eq!(out, "gułî ciwan\t\n");
        assert!(err.contains("contains a space"));
    }

    #[test]
    fn inflect_usage_error() {
        let (code, _, err) = run_with(&["inflect", "noun", "naw", "--form", "absolute", "--number", "pl"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("plural"));
    }
}
