use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations on the torus of the metaplectic double cover of
/// GSpin(2n+1) over a p-adic field.
///
/// Torus elements are lists of "v:k" tokens, one per coordinate: `v` is the
/// valuation and `k` the unit class (1 = square unit, 2 = the non-residue
/// unit). Over the reals only v = 0 is allowed, with 1 = positive and
/// 2 = negative. A token without a colon is read as a nonzero integer.
/// Tokens may also be comma separated; write `--t=-1:1,0:2` when the first
/// token starts with a minus sign.
#[derive(Parser, Debug)]
#[command(name = "gspin-cover-kit", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalArgs {
    /// Odd prime p, or `real`.
    #[arg(long, global = true)]
    pub p: Option<String>,
    /// Rank n of GSpin(2n+1).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Integer representing the non-square unit class.
    #[arg(long, global = true)]
    pub nonresidue: Option<u64>,
    /// Weil factor at the uniformizer: 1, -1, i or -i.
    #[arg(long = "gamma-pi", global = true, allow_hyphen_values = true)]
    pub gamma_pi: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for sampled (non-exhaustive) modes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// key=value file with defaults for the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coords {
    /// (t_1, .., t_{n+1}) with t = ∏ α_i^∨(t_i).
    #[default]
    Alpha,
    /// (a_1, .., a_n, t_1).
    Convenient,
}

#[derive(Args, Debug, Clone)]
pub struct TorusArg {
    /// Coordinates of the torus element.
    #[arg(long = "t", num_args = 1.., required = true)]
    pub t: Vec<String>,
    #[arg(long, value_enum, default_value_t = Coords::Alpha)]
    pub coords: Coords,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots of G_n, simple roots and the ambient Cartan matrix.
    Roots,
    /// σ(t, t') with its Hilbert-symbol factors and the commutator.
    Sigma {
        #[arg(long = "t", num_args = 1.., required = true)]
        t: Vec<String>,
        #[arg(long = "t2", num_args = 1.., required = true)]
        t2: Vec<String>,
        #[arg(long, value_enum, default_value_t = Coords::Alpha)]
        coords: Coords,
    },
    /// [b, b']_σ from the closed form and from σ(b,b')σ(b',b).
    Commutator {
        #[arg(long = "t", num_args = 1.., required = true)]
        t: Vec<String>,
        #[arg(long = "t2", num_args = 1.., required = true)]
        t2: Vec<String>,
        #[arg(long, value_enum, default_value_t = Coords::Alpha)]
        coords: Coords,
    },
    /// Membership, center and maximality checks for torus subgroups.
    #[command(subcommand)]
    Subgroup(SubgroupCmd),
    /// The exceptional character and its values.
    #[command(subcommand)]
    Chi(ChiCmd),
    /// Gindikin-Karpelevich constant c(w, χ) of the exceptional character.
    /// `w` is `w0`, `id` or a word in s2..s{n+1} (leftmost letter acts last).
    Gk {
        #[arg(required = true, num_args = 1..)]
        w: Vec<String>,
    },
    /// Order of the pole at s = 0 of the zeta quotient attached to w.
    PoleOrder {
        #[arg(required = true, num_args = 1..)]
        w: Vec<String>,
    },
    /// Orthogonal partitions of 2n+1 and the unipotent data attached to them.
    #[command(subcommand)]
    Orbits(OrbitsCmd),
    /// Run the exhaustive verification suites.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    T2,
    Tm,
    CenterTorus,
    CenterGroup,
    CentralizerK,
}

#[derive(Subcommand, Debug)]
pub enum SubgroupCmd {
    /// Membership of a torus element in one of the distinguished subgroups.
    Member {
        #[arg(long, value_enum)]
        tag: Tag,
        #[command(flatten)]
        torus: TorusArg,
    },
    /// Brute-force centralizer of the square-class torus against the
    /// parametric center.
    Centralizer {
        /// Valuations used for the square-class enumeration.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        valuations: String,
    },
    /// Abelian and maximality check by exhaustive extension search.
    MaximalAbelian {
        #[arg(long, value_enum, default_value_t = Tag::Tm)]
        tag: Tag,
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        valuations: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    /// χ₀ on T².
    Chi0,
    /// The genuine extension to the center of the covered torus.
    Center,
    /// χ' on Tᵐ.
    Prime,
}

#[derive(Args, Debug, Clone)]
pub struct CharacterArgs {
    /// η(ϖ): a fourth root of unity optionally times z, e.g. `z`, `-z`, `1`.
    #[arg(long = "eta-pi", default_value = "z", allow_hyphen_values = true)]
    pub eta_pi: String,
    /// η on the non-square unit class: 1 or -1.
    #[arg(long = "eta-u", default_value = "1", allow_hyphen_values = true)]
    pub eta_u: String,
}

#[derive(Subcommand, Debug)]
pub enum ChiCmd {
    /// Evaluate χ₀, the central character or χ' at a torus element.
    Eval {
        #[arg(long, value_enum, default_value_t = Which::Chi0)]
        which: Which,
        #[command(flatten)]
        torus: TorusArg,
        #[command(flatten)]
        eta: CharacterArgs,
    },
    /// χ(a_α) for every positive root, from the table and from χ₀.
    Table {
        #[command(flatten)]
        eta: CharacterArgs,
    },
    /// Check the exceptionality condition on every simple coroot.
    Check {
        #[command(flatten)]
        eta: CharacterArgs,
        /// Override the exponents of |a_i| (comma separated, n entries).
        #[arg(long, allow_hyphen_values = true)]
        exponents: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OrbitsCmd {
    /// Orthogonal partitions of 2n+1.
    List,
    /// Covering relations of the dominance order.
    Hasse,
    /// h-weights and the roots of V(O).
    Vorbit {
        /// `O0`, `O1` or a partition such as "3 1^4".
        #[arg(long, default_value = "O1")]
        orbit: String,
    },
    /// Stabilizer type in SO(m) of a vector of shape (o, e).
    StabType {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        o: usize,
        #[arg(long)]
        e: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate σ on one pair of torus elements.
    FlipSigma,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suites to run (comma separated); all when omitted.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
    #[arg(long, value_enum)]
    pub fault: Option<Fault>,
    /// Random triples for the sampled cocycle check (needs --seed).
    #[arg(long)]
    pub samples: Option<u64>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
}
