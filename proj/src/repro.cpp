#include "ecforge/repro.hpp"

#include <chrono>

#include "ecforge/errors.hpp"
#include "ecforge/torsion.hpp"

namespace ecforge {

namespace {

Rational R(const char* s) { return parse_rational(s); }

WeierstrassCurve curve5(const char* a1, const char* a2, const char* a3, const char* a4,
                        const char* a6) {
    return WeierstrassCurve(R(a1), R(a2), R(a3), R(a4), R(a6));
}

CurvePoint pt(const char* x, const char* y) { return CurvePoint(R(x), R(y)); }

UniPoly quartic(const char* c0, const char* c1, const char* c2, const char* c3, const char* c4) {
    return UniPoly({R(c0), R(c1), R(c2), R(c3), R(c4)});
}

std::vector<Rational> rvec(std::initializer_list<const char*> xs) {
    std::vector<Rational> v;
    for (const char* x : xs) v.push_back(R(x));
    return v;
}

/// Scan all subsets of the given size for one whose regulator interval
/// excludes zero; certifies the "k of the m known points are independent"
/// statements without new height computations.
void certify_some_subset(const IndependenceReport& rep, int size, ReproResult& res,
                         const std::string& what) {
    const int m = static_cast<int>(rep.gram.size());
    std::vector<int> idx(size);
    std::function<bool(int, int)> scan = [&](int pos, int from) {
        if (pos == size) return subset_regulator(rep, idx).certified_independent;
        for (int i = from; i < m - (size - pos - 1); ++i) {
            idx[pos] = i;
            if (scan(pos + 1, i + 1)) return true;
        }
        return false;
    };
    res.check(scan(0, 0), what);
}

// ---- family D feedstock ---------------------------------------------------

FamilyInstance build_D(long p) {
    return build_family_D(quads_from_triples(sumsprod_param(Rational(p))));
}

// ---- entry table -----------------------------------------------------------

std::vector<ReproEntry> make_registry() {
    std::vector<ReproEntry> reg;

    {
        ReproEntry e;
        e.id = "A-1";
        e.family = 'A';
        e.params_text = "(a0,a1,a2,a3,b0,b1,b2,b3) = (96,10,13,-23,66,-17,-5,22)";
        e.build = [] {
            Sec2Solution sol;
            sol.a0 = 96;
            sol.a = rvec({"10", "13", "-23"});
            sol.b0 = 66;
            sol.b = rvec({"-17", "-5", "22"});
            return build_family_A(sol);
        };
        e.expect_curve = curve5("0", "0", "0", "-399", "6226");
        e.exact_curve = true;
        e.expected_mapped_points = 6;
        e.reg_checks.push_back({"four independent points",
                                std::nullopt,
                                {pt("-10", "96"), pt("-13", "96"), pt("5", "66"), pt("17", "66")},
                                0.0,
                                0.01,
                                false});
        e.extra = [](const FamilyInstance& inst, ReproResult& res, int, GramMode) {
            res.check(inst.phi == UniPoly({R("6226"), R("-399"), R("0"), R("1")}),
                      "phi = x^3 - 399x + 6226 exactly");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "B-1";
        e.family = 'B';
        e.params_text = "(9333234,-1940,-1076,1324,1692 | 9541134,-2196,-356,460,2092)";
        e.build = [] {
            Sec2Solution sol;
            sol.a0 = 9333234;
            sol.a = rvec({"-1940", "-1076", "1324", "1692"});
            sol.b0 = 9541134;
            sol.b = rvec({"-2196", "-356", "460", "2092"});
            return build_family_B(sol);
        };
        e.expect_quartic = quartic("91785556686276", "-460748288", "-4768608", "0", "1");
        // our independent reduction is the reference; the printed form lacks
        // the x of the linear term
        e.expect_curve = curve5("0", "0", "0", "-23420131301937", "18114867816009096080");
        e.exact_curve = true;
        e.expected_mapped_points = 8;  // square leading coefficient keeps all 8
        e.flags = {"printed reduction omits the x of the -23420131301937 term; "
                   "the independently computed reduction is the reference"};
        e.extra = [](const FamilyInstance& inst, ReproResult& res, int doublings, GramMode mode) {
            std::vector<CurvePoint> pts;
            for (const auto& p : inst.points) pts.push_back(p.pt);
            auto rep = gram_regulator(inst.weierstrass, pts, doublings, mode);
            res.check(rep.regulator.interval().contains_zero(),
                      "8-point regulator interval contains 0 (only 7 independent)");
            certify_some_subset(rep, 7, res, "some 7 of the 8 points certified independent");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "C-1";
        e.family = 'C';
        e.params_text = "(p1,p2,q1,q2,r1,r2) = (5,-1,7,1,11,15)";
        e.build = [] {
            return build_family_C(te2_chains(R("5"), R("-1"), R("7"), R("1"), R("11"), R("15")));
        };
        e.expect_curve = curve5("0", "0", "0", "-22064074044012", "43046837966291058900");
        e.exact_curve = true;
        e.expected_mapped_points = 12;
        e.paper_points = {pt("2648646", "1785505722"),   pt("2774772", "1785505722"),
                          pt("3441438", "2805949146"),   pt("1909908", "2805949146"),
                          pt("-1639638", "-8649618978"), pt("5297292", "-8649618978"),
                          pt("-702702", "-7629175554"),  pt("5009004", "-7629175554"),
                          pt("-667436", "7581284326"),   pt("-426972", "7238075754"),
                          pt("430353", "5799241371")};
        e.reg_checks.push_back({"11 points", std::nullopt, e.paper_points, 1381592532.65, 0.01,
                                false});
        e.extra = [](const FamilyInstance& inst, ReproResult& res, int doublings, GramMode mode) {
            // the first 8 listed points are the construction's own; their
            // regulator certifies generic rank >= 8
            const auto& entry = repro_entry("C-1");
            std::vector<CurvePoint> first8(entry.paper_points.begin(),
                                           entry.paper_points.begin() + 8);
            auto rep = gram_regulator(inst.weierstrass, first8, doublings, mode);
            res.check(rep.certified_independent, "8-point subset regulator excludes 0");
            res.check(torsion_bound(integral_model(inst.weierstrass), 8) == 1,
                      "torsion bound 1 (trivial torsion group)");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "D-p2";
        e.family = 'D';
        e.params_text = "p = 2";
        e.build = [] { return build_D(2); };
        e.expect_curve =
            curve5("0", "0", "0", "-1136261157571019728659411",
                   "466685506089477132791551368731316450");
        e.exact_curve = false;
        e.expected_mapped_points = 11;
        const WeierstrassCurve minimal =
            curve5("0", "1", "0", "-958125505468762024", "361360495869188941993242116");
        e.paper_points = {pt("11149617229984/19321", "2123284512273843750/2685619"),
                          pt("-1171372325542/2401", "3140764291484625000/117649"),
                          pt("751945051961/16", "651907077554613387/64"),
                          pt("49012446586/81", "1294374710916872/729"),
                          pt("198014368166/361", "6305852501956812/6859"),
                          pt("641648531", "3279574736568"),
                          pt("59134648706/121", "4174284741150888/1331"),
                          pt("3005025814/9", "239485247913716/27"),
                          pt("9096019456", "862686952661118"),
                          pt("-48407290", "20189782661724"),
                          pt("14065754", "18651716303160"),
                          pt("73997912", "17054805737250"),
                          pt("90932456", "16582752629118")};
        e.reg_checks.push_back(
            {"13 points on the minimal model", minimal, e.paper_points, 389828159565.83, 0.01,
             false});
        e.extra = [minimal](const FamilyInstance&, ReproResult& res, int, GramMode) {
            auto iso = find_isomorphism(*repro_entry("D-p2").expect_curve, minimal);
            res.check(iso.has_value() && iso->u == 33 && iso->r == 363 && iso->s == 0,
                      "isomorphism to the minimal form uses u = 33, r = 363");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "D-p5";
        e.family = 'D';
        e.params_text = "p = 5";
        e.build = [] { return build_D(5); };
        e.expect_curve = curve5("0", "1", "0", "-7526665968750696273075230520630360",
                                "249763118169814320753109971139754041307175559002084");
        e.exact_curve = false;
        e.expected_mapped_points = 11;
        e.paper_abscissae = rvec(
            {"48634078038299278376983377/76247824",
             "8070419987630413400822239075641585/61155659809263616",
             "6092992423962972607322092830628647/80977443542798881",
             "461089280807619481351249719657621/8249557371401476",
             "9289851754473511254669830882814460671/35684558324214797449",
             "52525257722608835220923418493449617799/49899550759585419649",
             "277522049066244995131051766066574/4107959693396689",
             "20640417956268123829481926974/159239161",
             "2109895471283944241447243629999998/32199609729595009",
             "2510782654688490433512918809080605/16428907017388804",
             "86250313881356948400248550959543664531/1211480391364699110769",
             "1749307288076044116212179533960194190/9270856201405973329",
             "3892604721565311997214458198413742127151/16881711960419335668409"});
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "D-p7";
        e.family = 'D';
        e.params_text = "p = 7";
        e.build = [] { return build_D(7); };
        e.expect_curve = curve5("0", "0", "0", "-70080465281896617533991165744653594072570451",
                                "226274285487270710244792369861166227599729743261105332834795161250");
        e.exact_curve = true;
        e.expected_mapped_points = 11;
        e.extra = [](const FamilyInstance& inst, ReproResult& res, int doublings, GramMode mode) {
            // no printed regulator for this curve; certify 9 independent out
            // of the 11 constructed points
            std::vector<CurvePoint> pts;
            for (const auto& p : inst.points) pts.push_back(p.pt);
            auto rep = gram_regulator(inst.weierstrass, pts, doublings, mode);
            certify_some_subset(rep, 9, res, "some 9 of the 11 known points certified independent");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "E-1";
        e.family = 'E';
        e.params_text = "(m,n,p,q,r,s,u,v) = (1,7,3,5,2,11,3,4)";
        e.build = [] {
            return build_family_E(
                fam3_sol1(R("1"), R("7"), R("3"), R("5"), R("2"), R("11"), R("3"), R("4")));
        };
        e.expect_curve = curve5("0", "0", "1", "-78654091314536101", "4993138309311379361023650");
        e.exact_curve = false;
        e.expected_mapped_points = 11;
        e.paper_points = {
            pt("1419528264", "52476440000169"),
            pt("15427375761/16", "-1838910202387815/64"),
            pt("12233281459/25", "-1143413169906927/125"),
            pt("144154185/16", "132485022151835/64"),
            pt("52499795215/841", "13933569409840090/24389"),
            pt("-153755798", "-3667661902713"),
            pt("-2478831521/25", "-429700761309558/125"),
            pt("1680856689/25", "11737369812738/125"),
            pt("-512313311/9", "-82276801860745/27"),
            pt("29506697560865/68644", "-127942115051260580605/17984728")};
        // the printed regulator 44242748.70 is the computed value with the
        // decimal point shifted one place; every other printed regulator
        // matches the same height convention to < 0.4%
        e.reg_checks.push_back({"10 points (decimal-shift reading of the printed value)",
                                e.expect_curve, e.paper_points, 442427487.0, 0.01, false});
        e.flags = {"printed regulator 44242748.70 is off by a factor 10 from the computed "
                   "442427487; digit string matches a shifted decimal point"};
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "E-2";
        e.family = 'E';
        e.params_text = "(m,n,p1..p5) = (7,11,17,13,3,4,5)";
        e.build = [] {
            return build_family_E(
                fam3_sol2(R("7"), R("11"), {R("17"), R("13"), R("3"), R("4"), R("5")}));
        };
        e.expect_quartic = quartic("6210528187439825204004", "-3211739790886292400",
                                   "-10273867756103916", "2608103498364", "4834227853");
        e.expect_curve = curve5("0", "0", "0", "-10228318920208466879353470719100",
                                "12588116153737599336213325703794679840709018225");
        e.exact_curve = true;
        e.expected_mapped_points = 11;
        e.paper_points = {
            pt("344439380978543286825/50176", "5795192172625238725997832515115/11239424"),
            pt("37864559525453094264/7921", "190378377726108145643306415087/704969"),
            pt("7390525362088551811530/3948169", "7350096643832089074996920406555/7845011803"),
            pt("40752177956740667940/10609", "189196926839822274401570687145/1092727"),
            pt("1880956160305134", "1977925012570157318577"),
            pt("815024696079665265/4", "-735703752927007217019962295/8"),
            pt("348393114269455662474/52441", "-5856860499598881854668281177693/12008989"),
            pt("176126802575085971520/94249", "-5850422935694673933554684595/28934443"),
            pt("1815574360830758787030/582169", "46632563221988934899907398562195/444194947"),
            pt("1879426025359431", "-1826271996173185607046"),
            pt("51312686300223412434/21025", "141754394796246133687133659377/3048625")};
        RegulatorCheck rc{"first ten of the listed points", e.expect_curve, {}, 2078733082632.16,
                          0.01, false};
        rc.points.assign(e.paper_points.begin(), e.paper_points.begin() + 10);
        e.reg_checks.push_back(std::move(rc));
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "E-3";
        e.family = 'E';
        e.params_text = "(m,n,p1..p5) = (6,169,2,25/24,1/12,1,553/24)";
        e.build = [] {
            return build_family_E(
                fam3_sol2(R("6"), R("169"), {R("2"), R("25/24"), R("1/12"), R("1"), R("553/24")}));
        };
        e.expect_curve =
            curve5("0", "0", "1", "-1262161549165629265725", "17269863219444345499893710734056");
        e.exact_curve = false;
        e.expected_mapped_points = 12;  // square leading coefficient: nothing is lost
        e.extra = [](const FamilyInstance& inst, ReproResult& res, int doublings, GramMode mode) {
            std::vector<CurvePoint> pts;
            for (const auto& p : inst.points) pts.push_back(p.pt);
            auto rep = gram_regulator(inst.weierstrass, pts, doublings, mode);
            res.check(rep.regulator.interval().contains_zero(),
                      "12-point regulator interval contains 0 (only ten independent)");
            certify_some_subset(rep, 10, res, "some 10 of the 12 points certified independent");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "F-1";
        e.family = 'F';
        e.params_text = "(p,q,r,u,v,w,h1,h2) = (1,2,3,1,2,6,1,1)";
        e.build = [] {
            return build_family_F(
                fam4_sol(R("1"), R("2"), R("3"), R("1"), R("2"), R("6"), R("1"), R("1")));
        };
        e.expect_quartic = quartic("183592277856", "-65980539336", "40295401173", "825628494",
                                   "228921813");
        e.expect_curve =
            curve5("1", "-1", "0", "-47739269184667111896", "34123010787688902778640228336");
        e.exact_curve = false;
        e.expected_mapped_points = 11;
        e.paper_points = {pt("15442990559", "1726208463100830"),
                          pt("8073744052", "-418307928289508"),
                          pt("56888714071", "13469519053795315"),
                          pt("903891853220/121", "408863422459744464/1331"),
                          pt("6694247596", "-120558361349036"),
                          pt("1610576393500/169", "1465076329698280768/2197"),
                          pt("7007739736", "209084125480324"),
                          pt("29343760275580/4489", "11163685217533742272/300763"),
                          pt("75830334587992/6241", "-550761451920442092356/493039"),
                          pt("1811433219931/100", "2261228723749097149/1000"),
                          pt("179007778397401/5041", "2350163270404407688064/357911")};
        e.reg_checks.push_back({"11 points", e.expect_curve, e.paper_points, 78091770934.92, 0.01,
                                false});
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "F-2";
        e.family = 'F';
        e.params_text = "(p,q,r,u,v,w) = (2,3,7,1,6,5) with the special h1, h2";
        e.build = [] {
            auto [h1, h2] = fam4_special_h(R("2"), R("3"), R("7"), R("1"), R("6"), R("5"));
            return build_family_F(fam4_sol(R("2"), R("3"), R("7"), R("1"), R("6"), R("5"), h1, h2));
        };
        e.expect_curve = curve5(
            "0", "-1087315540936651467921677192224906456/1011981676729", "0",
            "-2080666617378148813778824077800168117359619615625000000/1005973",
            "3550434424189702535356505800072940355252343426161415124149138805670907141898925975000"
            "000000/1018026243284102317");
        e.exact_curve = false;
        e.expected_mapped_points = 12;  // the inversion keeps all 12 points
        e.paper_abscissae = rvec({"-1559069322059990914623052102500/1005973",
                                  "2629018856807043503089852565000/1005973",
                                  "3830856048490263390216642309000/1005973",
                                  "2114036106613885301522619945000/1005973",
                                  "-230843023135998969706492982500/1005973",
                                  "-1039379548039993943082034735000/1005973",
                                  "1126722367203018644181365385000/1005973",
                                  "352339351102314216920436657500/1005973",
                                  "-277011627763198763647791579000/1005973"});
        e.extra = [](const FamilyInstance&, ReproResult& res, int doublings, GramMode mode) {
            // regulator of the nine points with ordinates recovered from the
            // printed abscissae
            const auto& entry = repro_entry("F-2");
            std::vector<CurvePoint> pts;
            for (const auto& x : entry.paper_abscissae) {
                const auto& c = *entry.expect_curve;
                auto y = rational_sqrt(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
                if (!y) throw Error("F-2 abscissa lost its square ordinate");
                pts.emplace_back(x, *y);
            }
            auto rep = gram_regulator(*entry.expect_curve, pts, doublings, mode);
            const double got = rep.regulator.value.to_double();
            res.check(std::abs(got - 1769919385554.43) <= 0.01 * 1769919385554.43,
                      "regulator of the nine recovered points = 1769919385554.43 within 1% (got " +
                          std::to_string(got) + ")");
        };
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "G-1";
        e.family = 'G';
        e.params_text = "(p1,p2,q1,q2,u1,u2,v) = (1,3,1,2,-1,-2,2)";
        e.build = [] {
            return build_family_G(
                fam5_sol(R("1"), R("3"), R("1"), R("2"), R("-1"), R("-2"), R("2")));
        };
        e.expect_curve = curve5("0", "0", "0", "-1355064646307559724826793297",
                                "19084107576037868085853647087238447797889");
        e.exact_curve = true;
        e.expected_mapped_points = 13;
        e.paper_points = {
            pt("18418864238101437/4489", "35065928670711263766652015/300763"),
            pt("3515162745891513/256", "-226819310502255350099885/4096"),
            pt("16221384779701687/9", "2065579906231919277602675/27"),
            pt("2864636680992817/144", "346463627191057660375/1728"),
            pt("14187172304236697/4", "-1689742260465066483837525/8"),
            pt("41558257019243", "185862260604690940725"),
            pt("111473132761217/4", "435573324632366466105/8"),
            pt("19724021739113", "-5491624688580711135"),
            pt("1246644171412377/64", "-4573407885714980840125/512"),
            pt("8631074783686853287/199809", "18118450186381927653890152625/89314623"),
            pt("15822599097429157563/1125721", "-63367327980237642659414589655/1194389981")};
        e.reg_checks.push_back({"11 points", e.expect_curve, e.paper_points, 1379591921192.48,
                                0.01, false});
        reg.push_back(std::move(e));
    }

    {
        ReproEntry e;
        e.id = "G-2";
        e.family = 'G';
        e.params_text = "(p1,p2,q1,q2,u1,u2,v) = (1,3,1,2,-1,7,10)";
        e.build = [] {
            return build_family_G(
                fam5_sol(R("1"), R("3"), R("1"), R("2"), R("-1"), R("7"), R("10")));
        };
        e.expect_curve = curve5(
            "0", "0", "0", "-1297408166125308307368483393939351175899224072475192243",
            "537211144047153364926448357254872490627314988850400537154755515461210216146647438");
        e.exact_curve = true;
        e.expected_mapped_points = 13;
        e.paper_points = {
            pt("69347771822290530959179953385244041759/201984628329",
               "1043901467465442412996262336398161817260855826874630788912/90777345556017483"),
            pt("3460574163482908188427426712949356311/12038258961",
               "-18110589319957094495275336848944697540739742502451835824/1320825734941959"),
            pt("223827367575145652904326922554924756119/1504896849",
               "3348552250782159070948172554234175874539586500409115908848/58379463463257"),
            pt("231186011876763383027626811894567567679/4259781289",
               "3514369241948294947306662571663183913647384259899504483568/278023145389163"),
            pt("24094394300976927534448792419082071/80982001",
               "9710100599234190649985755744112823702319199233906064/728757026999"),
            pt("4326551170759510514050992088776186591/12882477001",
               "-17261150164745371973697619271361686469220145295462639664/1462174022090501"),
            pt("27279101467693705413869829787600198711/54437755761",
               "-45624789861369119683149199937634889173545547901847704624/12701362736400759"),
            pt("22716106097239890740417034083", "-3419512209640850893333977498177950568504084"),
            pt("511456149321465121080387323", "2726580252438987666764744334964171072596"),
            pt("948162104248407301294432275885974076879/1839096713689",
               "5772567839109568842182578374245288893337875076330512737232/2494059743625204637"),
            pt("495179529275123438140025363", "-4022507851813256992590035603118632514876"),
            pt("1770287854471182905213974043", "61549688245299760953310275285220691708364")};
        e.reg_checks.push_back({"12 points (computed Gram determinant is positive)",
                                e.expect_curve, e.paper_points, 0.0, 0.01, true});
        e.flags = {"printed regulator -2927257.43 is negative; a Gram determinant of "
                   "independent points is positive, and the computed value is ~1.16e15"};
        reg.push_back(std::move(e));
    }

    return reg;
}

}  // namespace

const std::vector<ReproEntry>& repro_registry() {
    static const std::vector<ReproEntry> registry = make_registry();
    return registry;
}

const ReproEntry& repro_entry(const std::string& id) {
    for (const auto& e : repro_registry())
        if (e.id == id) return e;
    throw Error("unknown repro id: " + id);
}

ReproResult run_repro(const ReproEntry& entry, int doublings, GramMode mode) {
    ReproResult res;
    res.id = entry.id;
    const auto start = std::chrono::steady_clock::now();

    FamilyInstance inst = entry.build();
    res.report = to_json(inst);

    if (entry.expect_quartic)
        res.check(inst.phi == *entry.expect_quartic, "quartic coefficients match exactly");

    if (entry.expect_curve) {
        if (entry.exact_curve) {
            res.check(inst.weierstrass == *entry.expect_curve, "curve coefficients match exactly");
        } else {
            auto iso = find_isomorphism(inst.weierstrass, *entry.expect_curve);
            res.check(iso.has_value(), "curve isomorphic to the printed model");
            if (iso)
                res.note("isomorphism (u, r, s, t) = (" + to_string(iso->u) + ", " +
                         to_string(iso->r) + ", " + to_string(iso->s) + ", " + to_string(iso->t) +
                         ")");
        }
    }

    if (entry.expected_mapped_points >= 0)
        res.check(static_cast<int>(inst.points.size()) == entry.expected_mapped_points,
                  "mapped point count = " + std::to_string(entry.expected_mapped_points));

    bool on_model = true;
    for (const auto& p : inst.points) on_model = on_model && inst.weierstrass.contains(p.pt);
    res.check(on_model, "every mapped point lies on the reduced curve exactly");

    if (!entry.paper_points.empty() && entry.expect_curve) {
        bool ok = true;
        for (const auto& p : entry.paper_points) ok = ok && entry.expect_curve->contains(p);
        res.check(ok, "all " + std::to_string(entry.paper_points.size()) +
                          " listed points lie on the printed curve exactly");
    }
    if (!entry.paper_abscissae.empty() && entry.expect_curve) {
        bool ok = true;
        for (const auto& x : entry.paper_abscissae) {
            const auto& c = *entry.expect_curve;
            ok = ok && is_square(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
        }
        res.check(ok, "all " + std::to_string(entry.paper_abscissae.size()) +
                          " listed abscissae have square ordinates on the printed curve");
    }

    auto ident = verify_identity(inst);
    res.check(ident.ok, "defining identity verified exactly");

    for (const auto& rc : entry.reg_checks) {
        const WeierstrassCurve& curve = rc.on_curve ? *rc.on_curve : inst.weierstrass;
        auto rep = gram_regulator(curve, rc.points, doublings, mode);
        const double got = rep.regulator.value.to_double();
        if (rc.positive_only) {
            res.check(rep.regulator.value.sign() > 0,
                      rc.label + ": regulator positive (got " + rep.regulator.value.str(12) + ")");
        } else if (rc.expected == 0.0) {
            res.check(rep.certified_independent,
                      rc.label + ": regulator certified nonzero (got " +
                          rep.regulator.value.str(12) + ")");
        } else {
            const bool ok = std::abs(got - rc.expected) <= rc.tolerance * std::abs(rc.expected);
            res.check(ok, rc.label + ": regulator " + std::to_string(rc.expected) + " within " +
                              std::to_string(100 * rc.tolerance) + "% (got " +
                              rep.regulator.value.str(14) + ")");
        }
        res.report["independence"] = to_json(rep);
    }

    if (entry.extra) entry.extra(inst, res, doublings, mode);

    for (const auto& f : entry.flags) res.note("flag: " + f);
    res.report["flags"] = entry.flags;
    res.report["id"] = entry.id;

    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace ecforge
