use crate::args::FigureArgs;
use crate::figures;
use crate::EXIT_OK;

pub fn run(args: &FigureArgs) -> Result<i32, String> {
    if args.dump {
        let text = figures::describe(&args.id)
            .ok_or_else(|| format!("unknown figure id '{}'", args.id))?;
        println!("{text}");
        return Ok(EXIT_OK);
    }
    let table = figures::render(&args.id)
        .ok_or_else(|| format!("unknown figure id '{}'", args.id))?;
    let path = args.out.as_ref().expect("clap requires --out without --dump");
    std::fs::write(path, table.to_csv())
        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    println!(
        "wrote {} ({} rows, {} columns)",
        path.display(),
        table.rows.len(),
        table.header.len()
    );
    Ok(EXIT_OK)
}
