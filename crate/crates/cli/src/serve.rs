use std::net::{Ipv4Addr, SocketAddr};
use std::process::ExitCode;

use anyhow::Context;
use idiff_service::{serve, ServiceConfig};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, default_value_t = 8737)]
    port: u16,
    /// Open the service address in a browser.
    #[arg(long)]
    open: bool,
}

pub fn run(args: Args) -> anyhow::Result<ExitCode> {
    let runtime = tokio::runtime::Runtime::new().context("cannot start runtime")?;
    runtime.block_on(async {
        let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, args.port));
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .with_context(|| format!("cannot listen on {addr}"))?;
        let url = format!("http://{}", listener.local_addr()?);
        eprintln!("idiff: serving on {url}");
        if args.open {
            open_browser(&url);
        }
        serve(listener, ServiceConfig::default()).await?;
        Ok(ExitCode::SUCCESS)
    })
}

fn open_browser(url: &str) {
    let opener = if cfg!(target_os = "macos") { "open" } else { "xdg-open" };
    if let Err(e) = std::process::Command::new(opener).arg(url).spawn() {
        log::warn!("cannot run {opener}: {e}");
    }
}
