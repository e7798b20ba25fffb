use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Cyclic permutation pattern avoidance: enumeration, statistics,
/// generating trees and checks of closed forms against exhaustive scans.
#[derive(Debug, Parser)]
#[command(name = "cycperm", version)]
pub struct Cli {
    /// Largest length any scan may reach (at most 12).
    #[arg(long, global = true, env = "CYCPERM_MAX_N", default_value_t = cycperm_core::enumerate::DEFAULT_CAP)]
    pub cap: usize,

    /// Worker threads for scans [default: available cores].
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "text")]
    pub format: String,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count an avoidance class for a range of lengths.
    Count {
        /// Pattern set, e.g. "[1234],[1342]" or "[13(24)]".
        #[arg(long)]
        patterns: String,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Distribution of a statistic over an avoidance class.
    Genfun {
        #[arg(long)]
        patterns: String,
        /// des, maj, inv, exc, pk (linear patterns) or cdes, cpk, joint (cyclic).
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
    },
    /// Check registered closed forms against scans; exit 1 on any mismatch.
    Verify {
        /// singles, doubles, triples, quads, genfuns, es, vincular, trees or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Partition all k-sets of length-4 cyclic patterns by counting vector.
    Wilf {
        #[arg(long, default_value_t = 4)]
        length: usize,
        #[arg(long)]
        set_size: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Keep sets of three or more patterns containing both [1234] and [1432].
        #[arg(long)]
        include_monotone_pair: bool,
    },
    /// Node counts and degrees of the generating tree, optionally checking
    /// the registered production rules.
    Tree {
        #[arg(long)]
        patterns: String,
        #[arg(long, default_value_t = 6)]
        levels: usize,
        #[arg(long)]
        rules: bool,
    },
    /// Build the extremal class avoiding [1..m+2] and [δ_(n+2)] and check
    /// that every class one longer contains one of them.
    Es {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Residuals of a conjectured EGF equation under each boundary convention.
    Conjecture {
        /// egf-123 or egf-213.
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// standard, no-empty or shifted; repeat for several [default: all].
        #[arg(long)]
        convention: Vec<String>,
    },
}
