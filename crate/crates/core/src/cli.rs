//! Command line front end. Every subcommand reads documents, calls one
//! library operation and writes a document (or a text report).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bands::{band_count, band_filter, band_mask, decompose, full_band_filter, Band};
use crate::error::{Error, Result};
use crate::freq::{freq_response, has_fourier_conjugate_symmetry, mask_from_freq, FreqResponse};
use crate::io::{
    parse_document, write_document, write_document_list, write_document_real, Document,
};
use crate::linalg::{ComplexMat, ComplexVec, C64};
use crate::mask::{
    apply_comb, apply_conv, comb_matrix, comb_to_conv, comb_unmatrix, conv_matrix, conv_to_comb,
    conv_unmatrix, MaskMatrix,
};
use crate::rank_one::{rank1_comb_apply, rank1_conv_apply, rank1_freq_response, RankOneMask};
use crate::verify::{render_report, verify_mask};

#[derive(Parser, Debug)]
#[command(
    name = "nsfilter",
    version,
    about = "Cyclic non-stationary filtering toolkit"
)]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit real numbers, dropping imaginary parts up to --real-tol.
    #[arg(long, global = true)]
    real: bool,

    #[arg(long, global = true, default_value_t = 1e-9)]
    real_tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct MaskArg {
    /// Mask matrix document (column t is the mask at time t); "-" for stdin.
    #[arg(long)]
    mask: PathBuf,
}

#[derive(Args, Debug)]
struct MatrixArg {
    /// Matrix document; "-" for stdin.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args, Debug)]
struct FactorArgs {
    /// Left factor c of the mask c d*.
    #[arg(long)]
    c: PathBuf,
    /// Right factor d of the mask c d*.
    #[arg(long)]
    d: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Conv,
    Comb,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cyclic convolution matrix conv(C).
    Conv(MaskArg),
    /// Cyclic combination matrix comb(C).
    Comb(MaskArg),
    /// Mask matrix from a convolution matrix.
    Unconv(MatrixArg),
    /// Mask matrix from a combination matrix.
    Uncomb(MatrixArg),
    /// comb(C) from conv(C).
    Conv2comb(MatrixArg),
    /// conv(C) from comb(C).
    Comb2conv(MatrixArg),
    /// Frequency response F = (1/N) DFT2(C^T).
    Freq(MaskArg),
    /// Mask matrix from a frequency response.
    Mask {
        #[arg(long)]
        freq: PathBuf,
    },
    /// Dense O(N^2) application of conv(C) or comb(C) to a signal.
    Apply {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        mask: PathBuf,
        #[arg(long)]
        signal: PathBuf,
    },
    /// Fast application for a rank-one mask c d*.
    #[command(name = "rank1-apply")]
    Rank1Apply {
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        factors: FactorArgs,
        #[arg(long)]
        signal: PathBuf,
    },
    /// Frequency response of a rank-one mask c d*.
    #[command(name = "rank1-freq")]
    Rank1Freq(FactorArgs),
    /// Band decomposition: all band masks, or one band mask C_k.
    Bands {
        #[arg(long)]
        mask: PathBuf,
        #[arg(long, conflicts_with = "band", required_unless_present = "band")]
        decompose: bool,
        #[arg(long)]
        band: Option<usize>,
    },
    /// Fast band filtering: one band given by (k, f_k), or all bands of a mask.
    #[command(name = "band-filter")]
    BandFilter {
        #[arg(long)]
        signal: PathBuf,
        #[arg(long, requires = "f", conflicts_with = "mask")]
        k: Option<usize>,
        /// Band row f_k; the mirror row is taken as conj(J f_k).
        #[arg(long, requires = "k")]
        f: Option<PathBuf>,
        #[arg(long, required_unless_present = "k")]
        mask: Option<PathBuf>,
    },
    /// Test Fourier conjugate symmetry of a matrix; prints true or false.
    #[command(name = "check-symmetry")]
    CheckSymmetry {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check the structural identities on a mask matrix.
    Verify {
        #[arg(long)]
        mask: PathBuf,
        /// Probe signal; defaults to (1, 2, ..., N).
        #[arg(long)]
        signal: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

enum Output {
    Doc(Document),
    Docs(Vec<Document>),
    Text(String),
    /// Report text plus whether it counts as success.
    Report(String, bool),
}

fn read_input(path: &PathBuf) -> Result<String> {
    let display = path.display().to_string();
    let io_err = |source| Error::Io {
        path: display.clone(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn load(path: &PathBuf) -> Result<Document> {
    parse_document(&read_input(path)?)
}

fn load_matrix(path: &PathBuf) -> Result<ComplexMat> {
    load(path)?.into_matrix()
}

fn load_vector(path: &PathBuf) -> Result<ComplexVec> {
    load(path)?.into_vector()
}

fn load_mask(path: &PathBuf) -> Result<MaskMatrix> {
    load_matrix(path).map(MaskMatrix::new)
}

fn load_rank_one(f: &FactorArgs) -> Result<RankOneMask> {
    RankOneMask::new(load_vector(&f.c)?, load_vector(&f.d)?)
}

fn execute(command: &Command) -> Result<Output> {
    use Output::Doc;
    Ok(match command {
        Command::Conv(a) => Doc(conv_matrix(&load_matrix(&a.mask)?).into()),
        Command::Comb(a) => Doc(comb_matrix(&load_matrix(&a.mask)?).into()),
        Command::Unconv(a) => Doc(conv_unmatrix(&load_matrix(&a.matrix)?).into_inner().into()),
        Command::Uncomb(a) => Doc(comb_unmatrix(&load_matrix(&a.matrix)?).into_inner().into()),
        Command::Conv2comb(a) => Doc(conv_to_comb(&load_matrix(&a.matrix)?).into()),
        Command::Comb2conv(a) => Doc(comb_to_conv(&load_matrix(&a.matrix)?).into()),
        Command::Freq(a) => Doc(freq_response(&load_mask(&a.mask)?).into_inner().into()),
        Command::Mask { freq } => {
            let f = FreqResponse::new(load_matrix(freq)?);
            Doc(mask_from_freq(&f).into_inner().into())
        }
        Command::Apply { mode, mask, signal } => {
            let c = load_mask(mask)?;
            let x = load_vector(signal)?;
            Doc(match mode {
                Mode::Conv => apply_conv(&c, &x)?,
                Mode::Comb => apply_comb(&c, &x)?,
            }
            .into())
        }
        Command::Rank1Apply {
            mode,
            factors,
            signal,
        } => {
            let m = load_rank_one(factors)?;
            let x = load_vector(signal)?;
            Doc(match mode {
                Mode::Conv => rank1_conv_apply(&m, &x)?,
                Mode::Comb => rank1_comb_apply(&m, &x)?,
            }
            .into())
        }
        Command::Rank1Freq(factors) => Doc(rank1_freq_response(&load_rank_one(factors)?)
            .into_inner()
            .into()),
        Command::Bands {
            mask,
            decompose: _,
            band,
        } => {
            let c = load_mask(mask)?;
            let bands = decompose(&c);
            match band {
                Some(k) => {
                    let b = bands.bands().get(*k).ok_or(Error::IndexOutOfRange {
                        index: *k,
                        bound: band_count(c.n()),
                    })?;
                    Doc(band_mask(b).into_inner().into())
                }
                None => Output::Docs(
                    bands
                        .bands()
                        .iter()
                        .map(|b| band_mask(b).into_inner().into())
                        .collect(),
                ),
            }
        }
        Command::BandFilter { signal, k, f, mask } => {
            let x = load_vector(signal)?;
            match (k, f, mask) {
                (Some(k), Some(f), _) => {
                    Doc(band_filter(&Band::new(*k, load_vector(f)?)?, &x)?.into())
                }
                (_, _, Some(mask)) => {
                    Doc(full_band_filter(&decompose(&load_mask(mask)?), &x)?.into())
                }
                _ => return Err(Error::Validation("need --k with --f, or --mask".into())),
            }
        }
        Command::CheckSymmetry { matrix, tol } => {
            let m = load_matrix(&matrix.matrix)?;
            Output::Text(format!("{}\n", has_fourier_conjugate_symmetry(&m, *tol)))
        }
        Command::Verify { mask, signal, tol } => {
            let c = load_mask(mask)?;
            let x = match signal {
                Some(p) => load_vector(p)?,
                None => ComplexVec::from_fn(c.n(), |t| C64::new(t as f64 + 1.0, 0.0)),
            };
            let checks = verify_mask(&c, &x, *tol)?;
            Output::Report(render_report(&checks), checks.iter().all(|c| c.passed))
        }
    })
}

fn render(cli: &Cli, output: Output) -> Result<(String, bool)> {
    let real = cli.real.then_some(cli.real_tol);
    Ok(match output {
        Output::Doc(d) => {
            let text = match real {
                Some(tol) => write_document_real(&d, tol)?,
                None => write_document(&d),
            };
            (text + "\n", true)
        }
        Output::Docs(ds) => (write_document_list(&ds, real)? + "\n", true),
        Output::Text(t) => (t, true),
        Output::Report(t, ok) => (t, ok),
    })
}

fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let (text, ok) = render(cli, execute(&cli.command)?)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            })?,
    }
    Ok(if ok { 0 } else { 1 })
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code: 0 success, 1 validation or dimension error, 2 I/O or parse
/// error.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return e.exit_code();
        }
    };
    match run(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
