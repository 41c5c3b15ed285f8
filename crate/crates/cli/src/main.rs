mod args;
mod commands;
mod config;
mod error;
mod output;
mod parse;
mod verify;

use std::fs;
use std::process::ExitCode;

use clap::Parser;

use args::{ChiCmd, Cli, Command, Format, OrbitsCmd, SubgroupCmd};
use config::RunConfig;
use error::CliError;
use output::{error_json, Report};

fn dispatch(cfg: &RunConfig, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Roots => commands::roots(cfg),
        Command::Sigma { t, t2, coords } => commands::sigma(cfg, t, t2, *coords),
        Command::Commutator { t, t2, coords } => commands::commutator(cfg, t, t2, *coords),
        Command::Subgroup(SubgroupCmd::Member { tag, torus }) => {
            commands::subgroup_member(cfg, *tag, torus)
        }
        Command::Subgroup(SubgroupCmd::Centralizer { valuations }) => {
            commands::subgroup_centralizer(cfg, valuations)
        }
        Command::Subgroup(SubgroupCmd::MaximalAbelian { tag, valuations }) => {
            commands::subgroup_maximal(cfg, *tag, valuations)
        }
        Command::Chi(ChiCmd::Eval { which, torus, eta }) => {
            commands::chi_eval(cfg, *which, torus, eta)
        }
        Command::Chi(ChiCmd::Table { eta }) => commands::chi_table(cfg, eta),
        Command::Chi(ChiCmd::Check { eta, exponents }) => {
            commands::chi_check(cfg, eta, exponents.as_deref())
        }
        Command::Gk { w } => commands::gk(cfg, w),
        Command::PoleOrder { w } => commands::pole_order(cfg, w),
        Command::Orbits(OrbitsCmd::List) => commands::orbits_list(cfg),
        Command::Orbits(OrbitsCmd::Hasse) => commands::orbits_hasse(cfg),
        Command::Orbits(OrbitsCmd::Vorbit { orbit }) => commands::orbits_vorbit(cfg, orbit),
        Command::Orbits(OrbitsCmd::StabType { m, o, e }) => commands::orbits_stab_type(*m, *o, *e),
        Command::Verify(v) => {
            let report = verify::run(cfg, v)?;
            if let Some(path) = &v.report {
                let text =
                    serde_json::to_string_pretty(&report.to_json(cfg)).expect("values serialize");
                fs::write(path, text + "\n")?;
            }
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_requested = cli.global.format == Some(Format::Json);
    let fail = |e: CliError, json: bool| {
        let code = e.exit_code();
        if json {
            println!("{}", error_json(&e.to_string(), code));
        }
        eprintln!("error: {e}");
        ExitCode::from(code as u8)
    };
    let cfg = match config::resolve(&cli.global) {
        Ok(c) => c,
        Err(e) => return fail(e, json_requested),
    };
    match dispatch(&cfg, &cli.command) {
        Ok(report) => {
            println!("{}", report.render(&cfg));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(e, cfg.format == Format::Json),
    }
}
