//! Words over arbitrary tokens: here integers, whose alphabet exceeds what
//! single characters could express.

use simonk::{normalize, solve, tokenize, Tokenization};

fn main() {
    let s = "404 200 200 301 404 500";
    let t = "404 200 301 200 404 500";
    let (ws, wt, map) = normalize(
        &tokenize(s, Tokenization::Tokens),
        &tokenize(t, Tokenization::Tokens),
    );
    println!("alphabet: {} tokens", map.sigma());
    let res = solve(&ws, &wt);
    println!("max k = {}", res.k);
    if let Some(d) = res.distinguisher {
        println!(
            "distinguisher: [{}] in {:?}",
            map.decode(&d.word).join(" "),
            d.side
        );
    }

    // token mode keeps whole words as letters
    let (a, b, map) = normalize(
        &tokenize("the cat saw the dog", Tokenization::Tokens),
        &tokenize("the dog saw the cat", Tokenization::Tokens),
    );
    let res = solve(&a, &b);
    let d = res.distinguisher.expect("sentences differ");
    println!(
        "max k = {}, distinguisher [{}]",
        res.k,
        map.decode(&d.word).join(" ")
    );
}
