//! Normal ordering in the fermion–current algebra and mode extraction.
//!
//! Run with `cargo run --example normal_ordering`.

use s1fc::algebra::{admissible, mode_extract, normal_order, normal_order_with, parse_word, reorder_normal, Strategy};
use s1fc::Result;
use std::collections::BTreeMap;

fn main() -> Result<()> {
    for text in ["j+(x) j-(y)", "j0(x) j0(y)", "b*(x) j-(y)", "c*(x) j0(y) j+(z)"] {
        let (w, ctx) = parse_word(text)?.to_letters()?;
        let nf = normal_order(&ctx, &w)?;
        println!("{text:<20} = {}", nf.display_with(ctx.names()));
        // every rewrite order gives the same result
        assert_eq!(nf, normal_order_with(&ctx, &w, Strategy::Seeded(7))?);
    }

    // reordering an already normal-ordered word
    let (w, ctx) = parse_word(":j-(y) j+(x):")?.to_letters()?;
    println!(":j-(y) j+(x):        = {}", reorder_normal(&ctx, &w)?.display_with(ctx.names()));

    // modes of :j+(x) j0(y): at x^1 y^0
    let (w, ctx) = parse_word(":j+(x) j0(y):")?.to_letters()?;
    let nf = reorder_normal(&ctx, &w)?;
    let modes: BTreeMap<String, u32> = [("x".to_string(), 2), ("y".to_string(), 1)].into();
    for (mw, c) in mode_extract(&nf, &ctx, &modes)? {
        let s: Vec<String> = mw.iter().map(|m| m.to_string()).collect();
        println!("mode term {c} · {}", s.join(" "));
    }

    let mw = parse_word("b*_1 c*_1")?.to_modes()?;
    println!("b*_1 c*_1 admissible on 2 sites: {:?}", admissible(&mw, 2));
    Ok(())
}
