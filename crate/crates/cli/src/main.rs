use clap::error::ErrorKind;
use clap::Parser;
use coprime_ap_cli::{run, Cli, Format, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let format = cli.format;
    let code = match run(cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => match serde_json::to_string_pretty(&out.json) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        std::process::exit(EXIT_INTERNAL);
                    }
                },
            }
            out.exit
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.exit
        }
    };
    std::process::exit(code);
}
