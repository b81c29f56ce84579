//! Special functions against reference values computed with 40-digit
//! arbitrary-precision arithmetic (mpmath).

use abwave::specfun::{
    bessel_j, bessel_j_batch, bessel_j_prime, bessel_tail_sum, gamma, hyp2f1, hyp2f3,
    tail_sum_direct, tail_sum_hypergeometric, truncation_order, Accuracy, X_SWITCH,
};
use abwave::FluxParameter;

const GAMMA_REF: &[(f64, f64)] = &[
    (1e-08, 99999999.422784342897),
    (0.001, 999.4237724845954453),
    (0.1, 9.5135076986687312858),
    (0.37, 2.4035500200786532783),
    (0.5, 1.7724538509055160273),
    (0.999, 1.0005782056293586485),
    (1.25, 0.90640247705547707798),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.3, 2.6834373819557683003),
    (7.77, 3181.543530989024945),
    (10.5, 1133278.3889487855673),
    (17.25, 42249866656927.035516),
    (25.01, 6.4061708723771446184e+23),
    (33.3, 7.4875775965226323274e+35),
    (42.42, 1.602999556700947484e+50),
    (49.99, 5.8500446524640013076e+62),
    (50.0, 6.0828186403426756087e+62),
];
const BESSEL_REF: &[(f64, f64, f64)] = &[
    (0.0, 0.5, 0.93846980724081290423),
    (0.0, 3.0, -0.26005195490193343762),
    (0.0, 25.5, 0.14406215754684786173),
    (0.0, 100.0, 0.019985850304223122424),
    (0.25, 3.0, -0.1006370643367312748),
    (0.25, 0.01, 0.29336799414397816201),
    (0.75, 1.5, 0.62246763740842806638),
    (0.5, 37.7, 0.00011541414388365818214),
    (0.05, 12.0, 0.029894205013967067478),
    (0.95, 29.99, -0.1241480871019278962),
    (0.3, 250.0, -0.042828975591490380459),
    (1.7, 499.5, 0.033834405109218180788),
    (12.25, 3.0, 1.3404553223970337718e-7),
    (12.25, 13.0, 0.24553583162413544613),
    (40.5, 42.0, 0.17646093409860903384),
    (40.5, 60.0, -0.10826115920255145413),
    (80.1, 55.5, 1.4160857898592956227e-8),
    (150.3, 120.0, 2.897197501884865313e-8),
    (300.7, 250.2, 1.9478817757725421876e-11),
    (499.0, 480.0, 0.0009576848713531623029),
    (600.25, 499.0, 7.0400813875939875302e-21),
    (25.25, 0.001, 1.2769517887307901446e-109),
    (-0.25, 2.0, 0.0035869156241729160775),
    (-0.75, 0.3, 1.0422621958764426578),
    (-0.6, 40.0, -0.097918876953788600086),
    (-1.0, 5.0, 0.32757913759146522204),
    (2.75, 26.0, -0.090553087816117847058),
    (4.9, 30.0, -0.14621676995944395119),
    (10.5, 400.0, 0.036505188061589815411),
    (0.49, 1e-06, 0.00092275939615209964886),
    (0.01, 6.5, 0.2573428387066980783),
];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn gamma_reference_values() {
    for &(x, g) in GAMMA_REF {
        let v = gamma(x).unwrap();
        assert!(rel(v, g) <= 1e-14, "gamma({x}) = {v}, want {g}");
    }
}

#[test]
fn bessel_reference_values() {
    for &(nu, x, j) in BESSEL_REF {
        let v = bessel_j(nu, x).unwrap();
        assert!(rel(v, j) <= 1e-12, "J_{nu}({x}) = {v:e}, want {j:e} (rel {:e})", rel(v, j));
    }
}

#[test]
fn bessel_domain_errors() {
    assert!(bessel_j(-1.5, 1.0).is_err());
    assert!(bessel_j(0.5, -1.0).is_err());
    assert!(bessel_j(0.5, 501.0).is_err());
    assert!(bessel_j(250.0, 10.0).is_err());
    assert!(bessel_j_prime(0.5, 0.0).is_err());
}

#[test]
fn bessel_derivative_identities() {
    for &x in &[0.3, 2.0, 7.5, 31.0] {
        let j1 = bessel_j(1.0, x).unwrap();
        assert!((bessel_j_prime(0.0, x).unwrap() + j1).abs() < 1e-15);
    }
    let want = 0.5 * (bessel_j(0.0, 2.0).unwrap() - bessel_j(2.0, 2.0).unwrap());
    assert!(rel(bessel_j_prime(1.0, 2.0).unwrap(), want) < 1e-12);

    let h = 1e-6;
    let fd = (bessel_j(0.75, 1.5 + h).unwrap() - bessel_j(0.75, 1.5 - h).unwrap()) / (2.0 * h);
    assert!((bessel_j_prime(0.75, 1.5).unwrap() - fd).abs() < 1e-8);

    for &(nu, x) in &[(0.25, 3.0), (2.6, 11.0), (40.3, 30.0)] {
        let want = 0.5 * (bessel_j(nu - 1.0, x).unwrap() - bessel_j(nu + 1.0, x).unwrap());
        assert!(rel(bessel_j_prime(nu, x).unwrap(), want) < 1e-12);
    }
}

#[test]
fn three_term_recurrence_residual() {
    let mut nu = 0.0;
    while nu <= 40.0 {
        let mut x = 0.25;
        while x <= 60.0 {
            let jm = bessel_j(nu - 1.0, x).unwrap();
            let j0 = bessel_j(nu, x).unwrap();
            let jp = bessel_j(nu + 1.0, x).unwrap();
            let scale = jm.abs().max(j0.abs()).max(jp.abs());
            let res = (jm + jp - 2.0 * nu / x * j0).abs();
            assert!(res <= 1e-10 * scale, "nu={nu} x={x}: residual {res:e}");
            x += 0.7;
        }
        nu += 0.85;
    }
}

#[test]
fn neumann_normalization() {
    let mut x = 0.05;
    while x <= 60.0 {
        let l = truncation_order(x);
        let batch = bessel_j_batch(FluxParameter::new(0.0).unwrap(), x, l).unwrap();
        let s: f64 = batch.iter().map(|&(_, j)| j * j).sum();
        assert!((s - 1.0).abs() <= 1e-12, "x={x}: {s}");
        x += 0.37;
    }
}

#[test]
fn half_integer_closed_form() {
    let mut x = 0.1;
    while x <= 50.0 {
        let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
        assert!(rel(bessel_j(0.5, x).unwrap(), exact) <= 1e-12, "x={x}");
        x += 0.013;
    }
}

#[test]
fn batch_matches_pointwise() {
    let flux = FluxParameter::new(0.25).unwrap();
    for (ell, j) in bessel_j_batch(flux, 2.0, 30).unwrap() {
        let direct = bessel_j((ell as f64 - 0.25).abs(), 2.0).unwrap();
        assert!((j - direct).abs() <= 1e-12 * direct.abs().max(1e-300), "l={ell}");
    }
    for (_, j) in bessel_j_batch(flux, 0.0, 5).unwrap() {
        assert_eq!(j, 0.0);
    }
    let integer = bessel_j_batch(FluxParameter::new(0.0).unwrap(), 1.0, 3).unwrap();
    assert_eq!(integer.len(), 7);
    assert!((integer[3].1 - bessel_j(0.0, 1.0).unwrap()).abs() < 1e-15);
}

#[test]
fn tail_sum_reference_values() {
    let acc = Accuracy::default();
    for &(nu, x, a) in &[
        (0.25, 5.0, 0.446_017_218_740_879_35),
        (0.75, 3.0, 0.408_585_079_936_138_52),
        (0.1, 20.0, 0.483_151_905_555_070_41),
    ] {
        let v = bessel_tail_sum(nu, x, &acc).unwrap();
        assert!(rel(v, a) < 1e-13, "A_{nu}({x}) = {v}, want {a}");
    }
    // The hypergeometric form against the truncated sum it represents.
    let direct: f64 = (1..=60).map(|j| bessel_j(j as f64 + 0.25, 5.0).unwrap().powi(2)).sum();
    assert!(rel(tail_sum_hypergeometric(0.25, 5.0, &acc).unwrap(), direct) < 1e-12);
}

#[test]
fn tail_sum_branch_consistency() {
    let acc = Accuracy::default();
    for i in 0..=40 {
        let nu = i as f64 * 0.025;
        for &x in &[X_SWITCH - 1.0, X_SWITCH, X_SWITCH + 1.0] {
            let a = tail_sum_hypergeometric(nu, x, &acc).unwrap();
            let b = tail_sum_direct(nu, x).unwrap();
            assert!((a - b).abs() <= 1e-10, "nu={nu} x={x}: {a} {b}");
        }
    }
}

#[test]
fn f23_reproduces_bessel_sum_parameters() {
    let acc = Accuracy::default();
    let nu: f64 = 0.375;
    let x: f64 = 12.5;
    let f = hyp2f3(nu, nu + 0.5, 1.0 + nu, 1.0 + nu, 1.0 + 2.0 * nu, -x * x, &acc).unwrap();
    let g = gamma(1.0 + nu).unwrap();
    let j = bessel_j(nu, x).unwrap();
    let a = -0.5 * j * j + (0.5 * x).powf(2.0 * nu) / (2.0 * g * g) * f;
    assert!(rel(a, tail_sum_direct(nu, x).unwrap()) < 1e-12);
}

#[test]
fn f23_rejects_bad_lower_parameters() {
    let acc = Accuracy::default();
    assert!(hyp2f3(0.5, 1.0, -2.0, 1.0, 1.0, -1.0, &acc).is_err());
    let tight = Accuracy::new(1e-12, 50).unwrap();
    assert!(hyp2f3(0.5, 1.0, 1.5, 1.0, 1.0, -900.0, &tight).is_err());
}

#[test]
fn f21_against_integral_representation() {
    // F(1,1;c;z) = (c−1) ∫₀¹ (1−t)^{c−2} / (1 − z t) dt; at ε = 0.05 the
    // exponent is the integer 3, so composite Simpson converges fast.
    let acc = Accuracy::default();
    let eps: f64 = 0.05;
    let c = 1.0 + 1.0 / (4.0 * eps);
    let z = 0.3;
    let n = 20_000;
    let f = |t: f64| (c - 1.0) * (1.0 - t).powf(c - 2.0) / (1.0 - z * t);
    let h = 1.0 / n as f64;
    let mut sum = f(0.0) + f(1.0);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(i as f64 * h);
    }
    let integral = sum * h / 3.0;
    let v = hyp2f1(1.0, 1.0, c, z, &acc).unwrap();
    assert!(rel(v, integral) < 1e-10, "{v} {integral}");

    // Continued-fraction branch near z → 1 against mpmath.
    for &(c, z, want) in &[
        (26.0, 0.999, 1.041_621_380_928_265_7),
        (1.6, 0.95, 5.218_521_277_688_236),
    ] {
        let v = hyp2f1(1.0, 1.0, c, z, &acc).unwrap();
        assert!(rel(v, want) < 1e-12, "c={c} z={z}: {v} {want}");
    }
}
const BESSEL_SCATTER: &[(f64, f64, f64)] = &[
    (-0.1961, 22.3909, -0.16802928726150545135),
    (-0.365547, 31.7191, 0.14109131008582431372),
    (6.56568, 2.89427, 0.004016240386565472331),
    (0.842427, 163.147, -0.042684759655996324687),
    (0.70781, 1.37199, 0.62891657821875951848),
    (8.92615, 4.31708, 0.0019346965199377777563),
    (244.06, 187.732, 1.1240451218509549807e-14),
    (0.758041, 12.4484, -0.11051463037157661911),
    (-0.869033, 1.39482, -0.37627887884962633548),
    (0.864334, 16.8302, -0.10412643812982345247),
    (0.57696, 427.188, -0.007267643629445357762),
    (128.793, 2.31807, 9.7973877852663947151e-210),
    (84.2187, 18.1283, 1.8274892223650164433e-47),
    (-0.313026, 2.72527, -0.35650066430500730134),
    (-0.260171, 2.64657, -0.30154251867933687659),
    (-0.8736, 32.9487, -0.073445031398729280395),
    (-0.930846, 34.096, -0.13323837339758962813),
    (-0.861592, 2.41822, -0.52152674430326177832),
    (503.919, 345.611, 2.4326038827230109774e-45),
    (0.0748337, 10.6296, -0.23435281034060906529),
    (0.737149, 368.503, -0.022238167492593327438),
    (-0.985467, 36.0334, 0.083347837863423961606),
    (-0.271793, 1.13753, 0.5531384594620733544),
    (0.83837, 27.7663, 0.12993916341054511443),
    (101.738, 9.20887, 8.3997222774612467867e-95),
    (2.02195, 0.903098, 0.09170852831450825526),
    (23.8734, 26.636, 0.2264390144080374007),
    (8.62811, 12.6595, 0.053296092397333185412),
    (-0.327853, 2.46557, -0.28435545393269159535),
    (0.0414884, 139.062, 0.067647466991726665321),
    (-0.37082, 16.2076, -0.18970808801487680283),
    (18.0813, 21.4157, 0.21221753313009490138),
    (1.94534, 2.14267, 0.39831388090045336452),
    (5.51706, 1.18055, 0.00017421174406776634102),
    (318.275, 188.401, 4.167996732847547673e-45),
    (0.92423, 360.968, 0.034893730191861633006),
    (0.261883, 21.4783, 0.024538868354076894745),
    (0.919758, 22.0121, 0.099517034528142765375),
    (-0.481788, 0.518689, 0.97732049897811445108),
    (3.44386, 2.83724, 0.19289582055062300916),
    (203.374, 33.7449, 1.9616910715811752975e-134),
    (-0.995064, 262.113, 0.02655607739048812383),
    (43.3122, 38.7762, 0.020429602516591668925),
    (-0.566322, 21.5486, -0.16223527932233720264),
    (0.851202, 1.57495, 0.60341605139513361946),
    (0.355347, 142.041, -0.052279506943392557689),
    (158.92, 358.848, 0.042749011686665732),
    (5.63069, 1.61455, 0.00074457711510179756751),
    (2.43942, 2.74447, 0.38692568517831693469),
    (48.3608, 119.674, -0.064056801261219888765),
    (0.200934, 0.601937, 0.79263784380037129693),
    (-0.975695, 171.748, -0.058335073649476829),
    (-0.938055, 0.439664, 0.062945255797222813528),
    (0.515287, 3.86856, -0.26291626524441355032),
    (0.370194, 226.975, 0.044100457374864388742),
    (118.57, 420.953, 0.032821757579672209102),
    (612.243, 455.65, 2.0863785029700913824e-39),
    (-0.658281, 2.63952, -0.48194562874537113053),
    (136.567, 495.29, -0.03236623910700229663),
    (-0.88039, 22.783, -0.028273980822973171093),
    (-0.238695, 307.698, 0.037825207889004886496),
    (0.550058, 10.3423, -0.18500550392015404286),
    (-0.0613967, 38.098, 0.12374183330371267065),
    (-0.715564, 247.76, -0.050499981981272946693),
    (0.269756, 142.875, -0.063895458324212427045),
    (-0.684856, 0.0420374, 4.9511905887098962729),
    (1.15219, 0.150475, 0.047120180847473921538),
    (0.144365, 3.93892, -0.38888162248764032651),
    (-0.860222, 1.87274, -0.50028205690331272135),
    (171.573, 10.4852, 1.0260373148804643509e-187),
    (9.08493, 9.53644, 0.25296396036538973532),
    (0.502149, 1.8993, 0.54858997409814658849),
    (2.72364, 0.0284274, 2.1696586896744147273e-6),
    (0.354099, 25.2442, 0.052682684573998153678),
    (5.53522, 2.40676, 0.0072553496427621981031),
    (0.758985, 162.695, -0.054980920215577656275),
    (0.564216, 12.9661, 0.065803393062868673308),
    (2.58673, 0.228238, 0.00099174349760428713568),
    (119.344, 0.656258, 6.0450173934417902088e-256),
    (0.221213, 32.122, 0.12796123685282910128),
    (-0.631753, 14.6226, -0.13403913046435459297),
    (3.00869, 1.62168, 0.074246969842029851112),
    (0.651204, 1.54692, 0.63558359303361049491),
    (-0.254208, 10.9458, -0.10361899781216460052),
    (204.193, 382.677, -0.030777011105546954612),
    (21.6716, 268.67, -0.030213501677460104905),
    (0.957787, 32.2363, 0.015657244788349089367),
    (-0.67912, 73.0947, -0.04058689907904162743),
    (4.58546, 1.27484, 0.0019609500897548556799),
    (1.27767, 30.1254, -0.088291413349807948893),
    (122.531, 235.956, 0.055884477952548400317),
    (0.48476, 37.6799, 0.0005885595907611958897),
    (106.281, 1.44784, 2.8609812163576442213e-186),
    (-0.753447, 2.36303, -0.49909154742931065765),
    (167.098, 6.29162, 5.6160177936670246482e-218),
    (0.00136532, 1.54781, 0.48585985658381293484),
    (168.13, 24.5945, 1.4065483349582045715e-120),
    (-0.456629, 96.5352, -0.049034614903270130574),
    (0.405461, 33.2804, 0.12507887754444131891),
    (-0.878106, 27.4838, -0.1495641341560888144),
    (0.570822, 0.0370446, 0.11518675630669464166),
    (0.74973, 313.886, -0.02779106124903525701),
    (-0.359674, 7.99779, 0.023688413799701182408),
    (0.131439, 2.48066, 0.063174972196780578216),
    (87.8522, 2.51076, 4.8900903030122246196e-126),
    (-0.517256, 255.783, -0.011357102932994799161),
    (0.981951, 29.0775, -0.0086372787240629682189),
    (0.106278, 7.5504, 0.27718861323332477148),
    (3.99581, 6.33368, 0.30602254322845298301),
    (0.212607, 2.96033, -0.10840477025975235763),
    (-0.117017, 23.0595, -0.14874622068162666608),
    (596.666, 452.029, 2.0682573485562455834e-35),
    (3.6022, 4.90612, 0.41198936344453252299),
    (4.34933, 0.556722, 0.000091979998017459335839),
    (-0.84145, 26.8494, -0.098118741599706189576),
    (51.6939, 193.189, 0.020101987968763049592),
    (-0.654555, 0.160419, 1.9828815070353288653),
    (394.653, 497.307, 0.043426040790945967618),
    (-0.566779, 17.289, 0.022438286654736981398),
    (-0.757653, 152.376, -0.026033898568211757932),
    (3.20372, 2.59947, 0.19545385246203814462),
    (-0.827987, 0.371388, 0.60084502460750810365),
    (71.2331, 32.6179, 2.2933261397455944937e-18),
    (0.87873, 19.9367, 0.086532080238116695174),
    (24.4727, 33.5167, -0.14197248003913042463),
    (-0.726108, 0.574524, 0.53219590495772363689),
    (1.76088, 5.39519, -0.17938019384561932549),
    (12.5932, 28.8058, 0.0056545144090750592653),
    (-0.016972, 2.9314, -0.24648256578101219488),
    (0.5997, 2.75149, 0.24301459037715698813),
    (0.279102, 0.493539, 0.71585839694703613861),
    (36.3147, 1.86574, 6.7787747527653568938e-44),
    (20.5768, 19.3397, 0.099666536045760336148),
    (15.7892, 30.8493, -0.15485065572765870484),
    (-0.28528, 426.317, 0.011187659541889873599),
    (0.608553, 2.61864, 0.3080193814222581242),
    (-0.946021, 284.449, -0.035120559921802253758),
    (241.526, 310.599, 0.023904736120610927349),
    (27.4183, 248.435, 0.016008314631425589014),
    (-0.855423, 2.09596, -0.52335026155880638188),
    (-0.701932, 39.4256, -0.05822611570416205626),
    (253.198, 339.927, -0.051647390234029337031),
    (-0.960326, 3.44067, -0.19117738346987811612),
    (-0.113627, 368.716, -0.035587765484724389596),
    (9.1364, 37.4175, -0.021623212968758459881),
    (-0.8184, 16.0089, -0.1369497582482671001),
    (146.792, 36.3916, 1.5381034714474149976e-72),
    (30.9396, 1.53639, 4.2068694090134767283e-38),
    (-0.916832, 0.41127, 0.18552615124498006961),
    (3.63276, 0.975749, 0.0049959520361204971765),
    (-0.686139, 212.027, 0.014214067987994928946),
    (28.1421, 5.88765, 2.3732517756390462781e-17),
    (0.140304, 0.678132, 0.82758621789361601495),
    (0.0669063, 149.047, -0.057328258183002958919),
    (-0.507083, 117.3, -0.035226708136339306691),
    (43.0342, 13.1273, 7.9133449471710879122e-19),
    (100.249, 9.59234, 4.9152190448190914017e-91),
    (54.6513, 0.921803, 1.3127084526568629143e-91),
    (2.07288, 1.40682, 0.19108219531882289839),
    (0.0310287, 15.3765, -0.078675300838027154619),
    (-0.0336689, 16.4382, -0.19673994392316975983),
    (4.33483, 5.43396, 0.3852262748476832703),
    (0.926477, 0.685488, 0.35902672315573423377),
    (2.84987, 22.4306, 0.011053166239564292491),
    (99.1545, 2.08616, 3.4106445416850151314e-155),
    (4.90478, 14.674, 0.161522330796946776),
    (0.310173, 408.917, 0.028522162779427871215),
    (12.9026, 10.0726, 0.033455675087760454751),
    (89.005, 353.463, -0.020261878103531263864),
    (191.864, 6.85771, 2.5692668856852148865e-254),
    (0.988807, 198.359, 0.018213969538900206505),
    (5.04968, 0.581404, 0.000014737459768318585834),
    (-0.234627, 400.239, -0.026630569354708618027),
    (-0.103321, 2.02487, 0.12270241900815022007),
    (1.59071, 6.0744, -0.32425173224958138947),
    (0.0512305, 275.739, -0.00080126829585425381471),
    (-0.648599, 0.012056, 10.855575277227037301),
    (-0.750419, 308.354, 0.029237350926268707002),
    (0.9447, 1.71376, 0.58921994690709582148),
    (73.7275, 2.26069, 8.0553658766855723401e-104),
    (0.307948, 31.6916, 0.077064079273517187712),
    (22.0891, 19.2833, 0.042421919276363074007),
    (146.091, 28.973, 5.2063201303199340786e-86),
    (47.7907, 26.1329, 1.0517556572586412977e-9),
    (0.372799, 2.04066, 0.44407625119302063215),
    (13.3814, 1.21006, 6.9352388905385003898e-14),
    (-0.93005, 38.5066, 0.010251358671757441247),
    (0.525088, 12.889, 0.062320766718748746902),
    (-0.885862, 443.816, -0.0042573687250563009372),
    (0.230026, 418.303, -0.030437634883748776248),
    (30.6266, 1.58464, 3.455698628770037905e-37),
    (-0.00992891, 368.375, -0.041540577710596170367),
    (0.829281, 0.333157, 0.23714215399031836602),
    (80.0123, 171.213, 0.0365294324830821314),
    (-0.758195, 1.46719, -0.26280320784037227344),
    (0.796761, 2.56515, 0.41666563074339919887),
    (-0.1508, 38.2104, 0.12896779028624699795),
    (-0.0298256, 2.70538, -0.16624541396786233232),
    (233.642, 349.929, 0.037981663657444749317),
    (26.5572, 23.2215, 0.032547358579980082382),
    (123.615, 102.783, 7.5300869027785323661e-6),
    (-0.486166, 32.8059, 0.0280522338842885018),
    (-0.774367, 23.1707, 0.0078333572030002273074),
    (76.5678, 29.7316, 1.3966924679628949854e-24),
    (-0.133768, 0.878867, 0.80187823148203766412),
    (276.524, 410.258, -0.045054349953458881698),
    (269.474, 295.113, 0.072471915837431646268),
    (0.479637, 14.4697, 0.19601893390186274037),
    (-0.000249941, 414.335, 0.016349729367299711904),
    (0.209427, 258.928, 0.048570424059260201524),
    (0.906123, 347.956, 0.042136128665933543509),
    (0.944536, 6.23211, -0.20633373464688674895),
    (90.7322, 499.455, 0.035999667041929066796),
    (0.466369, 31.0991, -0.037406462732710678407),
    (0.154845, 52.1724, 0.070710108811054568695),
    (0.734437, 1.24014, 0.61000128057807711468),
    (0.643049, 456.044, -0.010631758864094883468),
    (12.9432, 21.4691, -0.063954360935253232079),
    (0.62566, 20.0378, 0.14945701443366512463),
    (2.81193, 19.0749, 0.011719361850528125781),
    (4.6949, 1.58362, 0.0041588465624058324507),
    (25.1956, 21.0743, 0.018932526656043249202),
    (0.209795, 23.9223, -0.11224356192882901134),
    (1.39843, 1.20687, 0.34041700264143934829),
    (3.65692, 2.45808, 0.10488975909959876189),
    (-0.263086, 11.1725, -0.048172657957330575557),
    (-0.859978, 1.00637, -0.16605901161403726122),
    (0.727696, 222.5, 0.042234604557203694816),
    (323.224, 345.467, -0.012356857919421517824),
    (-0.799709, 4.93441, 0.24087218970594084512),
    (24.1875, 27.5826, 0.20628839292934166455),
    (-0.425729, 32.9299, 0.024143673111010356752),
    (-0.738736, 23.3529, 0.028309375910619204675),
    (10.9494, 10.2822, 0.14817281935071770357),
    (7.70693, 36.3853, 0.090949955387587611999),
    (216.224, 284.039, 0.049348753755754713029),
    (6.38742, 2.41725, 0.0018254401622887009679),
    (212.362, 23.2978, 4.4049281654280528822e-178),
    (108.422, 1.82464, 4.9473111677996398548e-180),
    (-0.490794, 0.859422, 0.57295307006139711963),
];

#[test]
fn bessel_scattered_reference_values() {
    let mut worst = (0.0, 0.0, 0.0);
    for &(nu, x, j) in BESSEL_SCATTER {
        let e = rel(bessel_j(nu, x).unwrap(), j);
        if e > worst.0 {
            worst = (e, nu, x);
        }
    }
    assert!(worst.0 <= 1e-12, "worst relative error {:e} at nu={} x={}", worst.0, worst.1, worst.2);
}
