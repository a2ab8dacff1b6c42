//! Local linearity of `Trop(φ ∘ ψ)` for the Hankel secant parameterisation:
//! the certificate region, its affine map, and the image of that region in
//! `Trop(X)`.

use tropcover::constructions::{local_linearity_check, WeightPoint};
use tropcover::laurent::{parse_map, parse_poly};
use tropcover::scalar::Rational;
use tropcover::scenarios::{HANKEL_DET, HANKEL_PHI, HANKEL_PSI};
use tropcover::tropical::{trop_hypersurface, tropicalize_poly};

fn main() -> tropcover::Result<()> {
    let phi = parse_map(HANKEL_PHI)?;
    let psi = parse_map(HANKEL_PSI)?;
    let w = WeightPoint::generic([2, 0, 1].iter().map(|&x| Rational::from_integer(x)).collect());
    let cert = local_linearity_check(&phi, &psi, &w)?;
    println!("valid {}, rank {}", cert.valid, cert.rank);
    println!("region: {}", cert.region.fmt_constraints());
    println!("differential {:?}, offset {:?}", cert.differential, cert.offset);

    let z: Vec<String> = (0..5).map(|k| format!("z{k}")).collect();
    let x = trop_hypersurface(&tropicalize_poly(&parse_poly(HANKEL_DET, &z)?)?);
    println!("image point {:?} on Trop(X): {}", cert.image_point, x.membership(&cert.image_point));
    let image = cert.image_of(&cert.region)?;
    println!("image of the region: {} (dimension {})", image.fmt_constraints(), image.dimension());

    // an exact weight on a tie is refused
    let tie = local_linearity_check(&phi, &psi, &WeightPoint::exact(vec![Rational::zero(); 3]))?;
    println!("at the origin: valid {}, {} ties", tie.valid, tie.ties.len());
    Ok(())
}
