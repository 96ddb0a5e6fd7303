//! Command-line front end for `cellgeom-core`: subcommands, JSON output and
//! the reproduction harness.

pub mod cli;
pub mod json;
pub mod repro;

/// Caps the global thread pool at `CELLGEOM_THREADS` when it is set to a
/// positive integer. Results do not depend on the thread count.
pub fn configure_threads() -> anyhow::Result<()> {
    let Ok(v) = std::env::var("CELLGEOM_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("CELLGEOM_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        anyhow::bail!("CELLGEOM_THREADS must be a positive integer, got 0");
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}
