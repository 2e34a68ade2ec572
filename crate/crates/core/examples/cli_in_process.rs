//! Running CLI commands in-process and capturing their output.

fn main() {
    let commands: [&[&str]; 3] = [
        &[
            "hyperint", "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ],
        &[
            "hyperint", "--json", "dist", "moment", "--family", "invgamma", "--theta", "3",
            "--eta", "2", "--n", "1",
        ],
        &[
            "hyperint",
            "--csv",
            "identity",
            "sweep",
            "--id",
            "T7",
            "--samples",
            "100",
            "--seed",
            "7",
        ],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = hyperint::cli::run(args.iter().copied(), &mut out, &mut err);
        println!(
            "$ {}\n{}exit {code}\n",
            args.join(" "),
            String::from_utf8_lossy(&out)
        );
    }
}
