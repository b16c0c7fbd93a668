//! `eccs`: key generation, encryption, decryption and inspection of ECCS
//! envelopes, plus the desk-scale self-test and the benchmark harness.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 usage, parse or file
//! error, 3 randomness failure, 4 invalid ciphertext.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eccs::bench;
use eccs::ecs::{self, EcsError};
use eccs::oracle::selftest;
use eccs::wire::{self, Artifact};
use eccs::{CurveId, CurveParams};
use rand_chacha::ChaCha20Rng;
use rand_core::{CryptoRng, OsRng, RngCore, SeedableRng};

#[derive(Parser)]
#[command(name = "eccs", version, about = "Cramer-Shoup encryption over elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair.
    Keygen {
        /// Curve name: secp256k1 or toy.
        #[arg(long, default_value = "secp256k1")]
        curve: String,
        #[arg(long = "pub", value_name = "PATH")]
        public: PathBuf,
        #[arg(long = "priv", value_name = "PATH")]
        private: PathBuf,
        /// Write base64 armor instead of raw bytes.
        #[arg(long)]
        armor: bool,
        #[command(flatten)]
        rng: RngArgs,
    },
    /// Encrypt a file under a public key.
    Encrypt {
        #[arg(long = "pub", value_name = "PATH")]
        public: PathBuf,
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
        #[arg(long)]
        armor: bool,
        #[command(flatten)]
        rng: RngArgs,
    },
    /// Decrypt a ciphertext file with a private key.
    Decrypt {
        #[arg(long = "priv", value_name = "PATH")]
        private: PathBuf,
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
    },
    /// Describe a key or ciphertext file.
    Inspect {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
    },
    /// Run the toy-curve oracle suite and SHA3 known-answer tests.
    Selftest {
        /// Replace G2 with 2*G1 to check that the suite notices.
        #[cfg(debug_assertions)]
        #[arg(long, hide = true)]
        corrupt_g2: bool,
    },
    /// Time and count operations for this scheme and an EC-ElGamal baseline.
    Bench {
        #[arg(long, default_value = "secp256k1")]
        curve: String,
        #[arg(long, default_value_t = 100)]
        iters: usize,
    },
}

#[derive(Args)]
struct RngArgs {
    /// Deterministic randomness for tests.
    #[cfg(debug_assertions)]
    #[arg(long)]
    seed: Option<u64>,
    /// Simulate an unavailable entropy source.
    #[cfg(debug_assertions)]
    #[arg(long, hide = true)]
    failing_rng: bool,
}

enum CliRng {
    Os(OsRng),
    #[cfg(debug_assertions)]
    Seeded(Box<ChaCha20Rng>),
    #[cfg(debug_assertions)]
    Failing,
}

impl RngArgs {
    fn rng(&self) -> CliRng {
        #[cfg(debug_assertions)]
        {
            if self.failing_rng {
                return CliRng::Failing;
            }
            if let Some(seed) = self.seed {
                return CliRng::Seeded(Box::new(ChaCha20Rng::seed_from_u64(seed)));
            }
        }
        CliRng::Os(OsRng)
    }
}

impl RngCore for CliRng {
    fn next_u32(&mut self) -> u32 {
        rand_core::impls::next_u32_via_fill(self)
    }

    fn next_u64(&mut self) -> u64 {
        rand_core::impls::next_u64_via_fill(self)
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.try_fill_bytes(dest).expect("randomness source failed")
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand_core::Error> {
        match self {
            CliRng::Os(r) => r.try_fill_bytes(dest),
            #[cfg(debug_assertions)]
            CliRng::Seeded(r) => r.try_fill_bytes(dest),
            #[cfg(debug_assertions)]
            CliRng::Failing => Err(rand_core::Error::new("entropy source unavailable")),
        }
    }
}

impl CryptoRng for CliRng {}

/// A failed command: exit code and a message for the error stream.
struct Failure {
    code: u8,
    message: String,
}

const USAGE: u8 = 2;
const RNG: u8 = 3;
const INVALID: u8 = 4;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn invalid_ciphertext() -> Failure {
    fail(INVALID, "invalid ciphertext")
}

impl From<EcsError> for Failure {
    fn from(e: EcsError) -> Self {
        match e {
            EcsError::Rng(_) => fail(RNG, e.to_string()),
            other => fail(USAGE, other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn curve(name: &str) -> Result<&'static CurveParams, Failure> {
    CurveId::from_name(name)
        .map(CurveId::params)
        .ok_or_else(|| fail(USAGE, format!("unknown curve '{name}' (expected secp256k1 or toy)")))
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| fail(USAGE, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, data: &[u8], private: bool) -> CmdResult {
    let result = (|| {
        let mut options = fs::OpenOptions::new();
        options.write(true).create(true).truncate(true);
        #[cfg(unix)]
        if private {
            use std::os::unix::fs::OpenOptionsExt;
            options.mode(0o600);
        }
        let mut file = options.open(path)?;
        #[cfg(unix)]
        if private {
            use std::os::unix::fs::PermissionsExt;
            file.set_permissions(fs::Permissions::from_mode(0o600))?;
        }
        file.write_all(data)?;
        file.sync_all()
    })();
    result.map_err(|e| fail(USAGE, format!("cannot write {}: {e}", path.display())))
}

/// Best-effort absolute form of a path that may not exist yet.
fn resolved(path: &Path) -> PathBuf {
    if let Ok(p) = fs::canonicalize(path) {
        return p;
    }
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    match (fs::canonicalize(parent), path.file_name()) {
        (Ok(dir), Some(name)) => dir.join(name),
        _ => path.to_path_buf(),
    }
}

fn distinct(paths: &[&Path]) -> CmdResult {
    let resolved: Vec<PathBuf> = paths.iter().map(|p| resolved(p)).collect();
    for (i, a) in resolved.iter().enumerate() {
        if resolved[i + 1..].contains(a) {
            return Err(fail(USAGE, format!("{} is used for both input and output", paths[i].display())));
        }
    }
    Ok(())
}

fn encode(artifact: &Artifact, armor: bool) -> Vec<u8> {
    if armor {
        wire::armor_artifact(artifact).into_bytes()
    } else {
        wire::serialize(artifact)
    }
}

fn cmd_keygen(curve_name: &str, public: &Path, private: &Path, armor: bool, rng: &RngArgs) -> CmdResult {
    let params = curve(curve_name)?;
    distinct(&[public, private])?;
    let (sk, pk) = ecs::keygen(params, &mut rng.rng())?;
    write(private, &encode(&Artifact::PrivateKey(sk), armor), true)?;
    write(public, &encode(&Artifact::PublicKey(pk), armor), false)
}

fn cmd_encrypt(public: &Path, input: &Path, output: &Path, armor: bool, rng: &RngArgs) -> CmdResult {
    distinct(&[public, input, output])?;
    let pk = match wire::parse_auto(&read(public)?) {
        Ok(Artifact::PublicKey(pk)) => pk,
        Ok(other) => return Err(fail(USAGE, format!("{} holds a {}, not a public key", public.display(), describe_kind(&other)))),
        Err(e) => return Err(fail(USAGE, format!("{}: {e}", public.display()))),
    };
    let message = read(input)?;
    let ct = ecs::encrypt(pk.curve().params(), &pk, &message, &mut rng.rng())?;
    write(output, &encode(&Artifact::Ciphertext(ct), armor), false)
}

fn cmd_decrypt(private: &Path, input: &Path, output: &Path) -> CmdResult {
    distinct(&[private, input, output])?;
    let sk = match wire::parse_auto(&read(private)?) {
        Ok(Artifact::PrivateKey(sk)) => sk,
        Ok(other) => return Err(fail(USAGE, format!("{} holds a {}, not a private key", private.display(), describe_kind(&other)))),
        Err(e) => return Err(fail(USAGE, format!("{}: {e}", private.display()))),
    };
    let data = read(input)?;
    // from here on every failure looks the same
    let ct = match wire::parse_auto(&data) {
        Ok(Artifact::Ciphertext(ct)) => ct,
        _ => return Err(invalid_ciphertext()),
    };
    let plaintext = ecs::decrypt(sk.curve().params(), &sk, &ct).map_err(|_| invalid_ciphertext())?;
    write(output, &plaintext, false)
}

fn describe_kind(artifact: &Artifact) -> &'static str {
    match artifact {
        Artifact::PublicKey(_) => "public key",
        Artifact::PrivateKey(_) => "private key (scalars withheld)",
        Artifact::Ciphertext(_) => "ciphertext",
    }
}

fn cmd_inspect(input: &Path) -> CmdResult {
    let artifact = wire::parse_auto(&read(input)?).map_err(|e| fail(USAGE, format!("{}: {e}", input.display())))?;
    let size = wire::serialize(&artifact).len();
    let mut line = format!("{}, {}, {size} bytes", describe_kind(&artifact), artifact.curve().name());
    if let Artifact::Ciphertext(ct) = &artifact {
        line.push_str(&format!(", {} chunk{}", ct.total(), if ct.total() == 1 { "" } else { "s" }));
    }
    println!("{line}");
    Ok(())
}

fn cmd_selftest(corrupt_g2: bool) -> Result<bool, Failure> {
    let toy = CurveId::Toy.params();
    let corrupted;
    let params = if corrupt_g2 {
        let g1 = *toy.g1();
        let two_g1 = toy.point_add(&g1, &g1).map_err(|e| fail(USAGE, e.to_string()))?;
        corrupted = CurveParams::with_generators(CurveId::Toy, *toy.p(), *toy.a(), *toy.b(), *toy.order(), g1, two_g1)
            .map_err(|e| fail(USAGE, e.to_string()))?;
        &corrupted
    } else {
        toy
    };
    let mut rng = ChaCha20Rng::seed_from_u64(0x5E1F);
    let report = selftest::run(params, selftest::Config::default(), &mut rng);
    for check in &report.checks {
        println!("{check}");
    }
    let passed = report.passed();
    println!("selftest {}", if passed { "passed" } else { "FAILED" });
    Ok(passed)
}

fn cmd_bench(curve_name: &str, iters: usize) -> CmdResult {
    let params = curve(curve_name)?;
    if iters < bench::MIN_ITERS {
        return Err(fail(USAGE, format!("--iters must be at least {}", bench::MIN_ITERS)));
    }
    let mut rng = OsRng;
    let report = bench::run_suite(params, iters, &mut rng).map_err(|e| match e {
        bench::BenchError::Ecs(e) => Failure::from(e),
        other => fail(USAGE, other.to_string()),
    })?;
    let (elgamal_accepts, ecs_accepts) = bench::malleability_demo(params, &mut rng)?;
    let mut out = io::stdout().lock();
    let _ = write!(out, "{}", bench::render_table(&report));
    let _ = writeln!(
        out,
        "malleability: E + G1 accepted by ec-elgamal: {elgamal_accepts}; by ec-cramer-shoup: {ecs_accepts}\n"
    );
    let _ = write!(out, "{}", bench::render_kv(&report));
    let _ = writeln!(out, "malleability.elgamal_accepts={elgamal_accepts}");
    let _ = writeln!(out, "malleability.ecs_accepts={ecs_accepts}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Keygen { curve, public, private, armor, rng } => cmd_keygen(curve, public, private, *armor, rng),
        Command::Encrypt { public, input, output, armor, rng } => cmd_encrypt(public, input, output, *armor, rng),
        Command::Decrypt { private, input, output } => cmd_decrypt(private, input, output),
        Command::Inspect { input } => cmd_inspect(input),
        #[cfg(debug_assertions)]
        Command::Selftest { corrupt_g2 } => match cmd_selftest(*corrupt_g2) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        #[cfg(not(debug_assertions))]
        Command::Selftest {} => match cmd_selftest(false) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        Command::Bench { curve, iters } => cmd_bench(curve, *iters),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
