//! Parse a problem file, print it back, and run it through the command runner.

use lrcoh::cli::{load_problem, parse_grid, run, Command, RunOptions};

const TEXT: &str = "\
[task]
command = verify_mf

[grid]
m = 2..3
n = 2..3
k = 1..m
l = 1..n

[ring]
variables = x, y, z
weights = 2n, 2m, mn
relation = x^m + y^n + z^2
reduce = z^2

[module]
degrees = solve
presentation = [x^(m-k), y^(n-l), 0, z; y^l, -x^k, z, 0;
                z, 0, -y^(n-l), -x^k; 0, z, x^(m-k), -y^l]
companion = [x^k, y^(n-l), z, 0; y^l, -x^(m-k), 0, z;
             0, z, -y^l, x^k; z, 0, -x^(m-k), -y^(n-l)]
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = load_problem(TEXT)?;
    print!("{}", file.print());
    assert_eq!(load_problem(&file.print())?, file);

    let opts = RunOptions {
        max_degree: None,
        grid: parse_grid("m=2..2,n=2..3")?,
    };
    let report = run(Command::VerifyMf, &file, &opts)?;
    println!("\n{}", report.render());

    let err = load_problem("[ring]\nvariables = x, y\nrelation = x^2 + y\nreduce = x*y\n").unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
