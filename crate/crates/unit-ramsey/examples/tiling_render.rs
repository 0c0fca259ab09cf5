//! Exact tiling audits (tile diameter, same-color cross-tile distance) and
//! SVG renderings of all four plane schemes.
//!
//! Run with: cargo run --example tiling_render
//! SVGs land in target/render/.

use unit_ramsey::plane::{render_svg, tiling_audit, PlaneScheme};

fn main() -> std::io::Result<()> {
    let hex = PlaneScheme::hex4(2.0 / 3.0).unwrap();
    let audit = tiling_audit(&hex).unwrap();
    println!(
        "hex4(2/3): in-tile diameter {:.6} (< sqrt2 = {:.6}), same-color cross-tile {:.6} (> 1)",
        audit.in_tile_diameter,
        std::f64::consts::SQRT_2,
        audit.min_same_color_cross_tile
    );

    let audit = tiling_audit(&PlaneScheme::square4()).unwrap();
    println!(
        "square4: in-tile diameter {:.6} (attained only on excluded boundary: {}), cross-tile {:.6} (strict: {})",
        audit.in_tile_diameter,
        audit.diameter_attained_only_on_excluded_boundary,
        audit.min_same_color_cross_tile,
        audit.cross_tile_attained_only_on_excluded_boundary
    );

    std::fs::create_dir_all("target/render")?;
    let jobs = [
        (
            "strips",
            PlaneScheme::strips(PlaneScheme::triangle_free_strip_width()).unwrap(),
            8.0,
        ),
        (
            "staircase",
            PlaneScheme::staircase(PlaneScheme::q11_free_staircase_run()).unwrap(),
            12.0,
        ),
        ("hex4", hex, 8.0),
        ("square4", PlaneScheme::square4(), 8.0),
    ];
    for (name, scheme, extent) in jobs {
        let svg = render_svg(&scheme, (0.0, 0.0, extent, extent), 240).unwrap();
        let path = format!("target/render/{name}.svg");
        std::fs::write(&path, &svg)?;
        println!("wrote {path} ({} bytes)", svg.len());
    }
    Ok(())
}
