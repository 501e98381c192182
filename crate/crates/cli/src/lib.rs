//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text for stdout and stderr, so that tests can drive it
//! without spawning a process.

use clap::{Args, Parser, Subcommand, ValueEnum};

use unipotent_core::atlas::build_atlas;
use unipotent_core::classical_maps::{fiber, is_split_unipotent};
use unipotent_core::oracle::{run_suite, SUITES};
use unipotent_core::special_classes::{special_classes, tau};
use unipotent_core::weyl_classes::{is_split, m_of_class};
use unipotent_core::{
    phi, pi, psi, rho, CharVariant, ClassSymbol, Error, Family, GroupContext, UnipotentSymbol,
};

#[derive(Parser, Debug)]
#[command(
    name = "unipotent",
    version,
    about = "Weyl group classes and the unipotent classes they map to"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ContextArgs {
    /// A, B, C, D, G2, F4, E6, E7 or E8.
    #[arg(long)]
    family: String,
    /// Rank; implied for exceptional families.
    #[arg(long)]
    rank: Option<u32>,
    /// Characteristic: good, p2 or p3. A prime that is good for the
    /// family is treated as `good`.
    #[arg(long = "char", default_value = "good")]
    characteristic: String,
    /// Size limit for enumerations and verification suites.
    #[arg(long)]
    bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Unipotent class of a Weyl group class.
    Phi {
        #[command(flatten)]
        ctx: ContextArgs,
        class: String,
    },
    /// Fiber minimizer of a unipotent class.
    Psi {
        #[command(flatten)]
        ctx: ContextArgs,
        unipotent: String,
    },
    /// All classes mapping to a unipotent class, by fixed-space dimension.
    Fiber {
        #[command(flatten)]
        ctx: ContextArgs,
        unipotent: String,
    },
    /// Fixed-space dimension of a class.
    M {
        #[command(flatten)]
        ctx: ContextArgs,
        class: String,
    },
    /// Characteristic-zero unipotent class attached to a unipotent class.
    Rho {
        #[command(flatten)]
        ctx: ContextArgs,
        unipotent: String,
    },
    /// Unipotent class attached to a characteristic-zero unipotent class.
    Pi {
        #[command(flatten)]
        ctx: ContextArgs,
        unipotent: String,
    },
    /// Special classes with their representation labels.
    Special {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Representation label of a special class.
    Tau {
        #[command(flatten)]
        ctx: ContextArgs,
        class: String,
    },
    /// Every map for the context, as records.
    Atlas {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        suite: String,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn context(args: &ContextArgs) -> Result<GroupContext, Error> {
    let family: Family = args.family.parse()?;
    let variant: CharVariant = args.characteristic.parse()?;
    let rank = match (family.exceptional_rank(), args.rank) {
        (Some(fixed), None) => fixed,
        (_, Some(n)) => n,
        (None, None) => {
            return Err(Error::UnknownContext(format!(
                "--rank is required for {family}"
            )))
        }
    };
    GroupContext::for_characteristic(family, rank, variant)
}

fn check_bound(ctx: &GroupContext, bound: Option<u32>) -> Result<(), Error> {
    match bound {
        Some(b) if ctx.family().is_classical() && ctx.rank() > b => Err(Error::BoundExceeded {
            requested: ctx.rank(),
            bound: b,
        }),
        _ => Ok(()),
    }
}

fn split_suffix(split: bool) -> &'static str {
    if split {
        " [split]"
    } else {
        ""
    }
}

fn line(
    format: Format,
    key: &str,
    input: impl std::fmt::Display,
    field: &str,
    value: impl std::fmt::Display,
    split: bool,
) -> String {
    match format {
        Format::Plain => format!("{value}{}\n", split_suffix(split)),
        Format::Records => format!(
            "{key}={input}\t{field}={value}\tsplit={}\n",
            u8::from(split)
        ),
    }
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Phi { ctx: args, class } => {
            let ctx = context(&args)?;
            let c = ClassSymbol::parse(&ctx, &class)?;
            let u = phi(&ctx, &c)?;
            Outcome::ok(line(
                args.format,
                "class",
                &c,
                "phi",
                &u,
                is_split_unipotent(&ctx, &u),
            ))
        }
        Command::Psi {
            ctx: args,
            unipotent,
        } => {
            let ctx = context(&args)?;
            let u = UnipotentSymbol::parse(&ctx, &unipotent)?;
            let c = psi(&ctx, &u)?;
            Outcome::ok(line(
                args.format,
                "unipotent",
                &u,
                "psi",
                &c,
                is_split(&ctx, &c),
            ))
        }
        Command::Fiber {
            ctx: args,
            unipotent,
        } => {
            let ctx = context(&args)?;
            check_bound(&ctx, args.bound)?;
            let u = UnipotentSymbol::parse(&ctx, &unipotent)?;
            let mut out = String::new();
            for c in fiber(&ctx, &u)? {
                let m = m_of_class(&ctx, &c)?;
                out.push_str(&match args.format {
                    Format::Plain => format!("{c}{}\n", split_suffix(is_split(&ctx, &c))),
                    Format::Records => {
                        format!(
                            "unipotent={u}\tclass={c}\tm={m}\tsplit={}\n",
                            u8::from(is_split(&ctx, &c))
                        )
                    }
                });
            }
            Outcome::ok(out)
        }
        Command::M { ctx: args, class } => {
            let ctx = context(&args)?;
            let c = ClassSymbol::parse(&ctx, &class)?;
            let m = m_of_class(&ctx, &c)?;
            Outcome::ok(line(args.format, "class", &c, "m", m, is_split(&ctx, &c)))
        }
        Command::Rho {
            ctx: args,
            unipotent,
        } => {
            let ctx = context(&args)?;
            let u = UnipotentSymbol::parse(&ctx, &unipotent)?;
            let u0 = rho(&ctx, &u)?;
            Outcome::ok(line(
                args.format,
                "unipotent",
                &u,
                "rho",
                &u0,
                is_split_unipotent(&ctx.good(), &u0),
            ))
        }
        Command::Pi {
            ctx: args,
            unipotent,
        } => {
            let ctx = context(&args)?;
            let u0 = UnipotentSymbol::parse(&ctx.good(), &unipotent)?;
            let u = pi(&ctx, &u0)?;
            Outcome::ok(line(
                args.format,
                "unipotent",
                &u0,
                "pi",
                &u,
                is_split_unipotent(&ctx, &u),
            ))
        }
        Command::Special { ctx: args } => {
            let ctx = context(&args)?;
            check_bound(&ctx, args.bound)?;
            let mut out = String::new();
            for (image, label) in special_classes(&ctx)? {
                out.push_str(&match args.format {
                    Format::Plain => format!(
                        "{} -> {label}{}\n",
                        image.class,
                        split_suffix(label.is_split())
                    ),
                    Format::Records => {
                        format!(
                            "special={}\ttau={label}\tsplit={}\n",
                            image.class,
                            u8::from(label.is_split())
                        )
                    }
                });
            }
            Outcome::ok(out)
        }
        Command::Tau { ctx: args, class } => {
            let ctx = context(&args)?;
            let c = ClassSymbol::parse(&ctx, &class)?;
            let label = tau(&ctx, &c)?;
            Outcome::ok(line(
                args.format,
                "class",
                &c,
                "tau",
                &label,
                label.is_split(),
            ))
        }
        Command::Atlas { ctx: args } => {
            let ctx = context(&args)?;
            check_bound(&ctx, args.bound)?;
            Outcome::ok(build_atlas(&ctx)?.to_records())
        }
        Command::Verify { ctx: args, suite } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::BadInput(format!(
                    "unknown suite {suite:?}; one of {}",
                    SUITES.join(", ")
                )));
            }
            let ctx = context(&args)?;
            let report = run_suite(&suite, &ctx, args.bound)?;
            let text = match args.format {
                Format::Plain => report.to_string(),
                Format::Records => report.to_records(),
            };
            Outcome {
                code: if report.passed() { 0 } else { 1 },
                stdout: text,
                stderr: String::new(),
            }
        }
    })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")))
}
