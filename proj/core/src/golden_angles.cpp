#include "qsparith/golden_angles.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsparith {

namespace {

// Published angle sets.  Rows whose terminal angles carry "+ pi/2" are
// stored bare with end_offset = true.  The step_1/20 row is reconstructed
// from its self-consistent outer entries and the antisymmetry relation (the
// printed middle of that row contains two typographic slips and one
// duplicated value).

PhaseSchedule sched(std::vector<double> a, bool off) {
    PhaseSchedule s = make_schedule(std::move(a), off, 1e-9);
    if (!s.antisymmetric)
        throw std::logic_error("golden schedule failed antisymmetry");
    return s;
}

std::vector<GoldenEntry> build_table() {
    std::vector<GoldenEntry> t;

    t.push_back({"p2a_2x3", "p2a",
                 sched({1.220677134473429, -0.9141986745515728, -1.2955052748350293,
                        1.2955052748350293, 0.9141986745515728, -1.220677134473429},
                       true),
                 target_p2a(), 0.0, false});

    t.push_back({"p2a_2x4", "p2a",
                 sched({0.8681682322909842, 0.4424429404278441, 1.7226820955233317,
                        -0.28367943409333685, 0.28367943409333685, -1.7226820955233317,
                        -0.4424429404278441, -0.8681682322909842},
                       true),
                 target_p2a(), 0.0, false});

    t.push_back({"p2a_2x8", "p2a",
                 sched({1.2320580637283647, 0.8252473731446527, -1.1775425298146687,
                        0.2540914369944401, -1.899907730573736, 0.6454484715597536,
                        -0.4868827734973951, 1.8131545375465181, -1.8131545375465181,
                        0.4868827734973951, -0.6454484715597536, 1.899907730573736,
                        -0.2540914369944401, 1.1775425298146687, -0.8252473731446527,
                        -1.2320580637283647},
                       true),
                 target_p2a(), 0.0, false});

    t.push_back({"p2a_2x10", "p2a",
                 sched({1.3329924058101739, 1.035009436993698, 0.3490884010660929,
                        -0.3586872071383961, -0.5059414117977128, 1.0391369102079064,
                        -1.642759890740595, -1.1252631786120018, 0.33295057920975346,
                        0.6452181263562808, -0.6452181263562808, -0.33295057920975346,
                        1.1252631786120018, 1.642759890740595, -1.0391369102079064,
                        0.5059414117977128, 0.3586872071383961, -0.3490884010660929,
                        -1.035009436993698, -1.3329924058101739},
                       true),
                 target_p2a(), 0.0, false});

    t.push_back({"a2p_2x3", "a2p",
                 sched({1.3276443279747514, 1.415148148001756, 1.058648479211631,
                        -1.058648479211631, -1.415148148001756, -1.3276443279747514},
                       false),
                 target_a2p(), 0.0, false});

    t.push_back({"a2p_2x4", "a2p",
                 sched({2.318411389939721, -1.328581845947473, -0.8059565062780474,
                        -1.3599512330439159, 1.3599512330439159, 0.8059565062780474,
                        1.328581845947473, -2.318411389939721},
                       false),
                 target_a2p(), 0.0, false});

    t.push_back({"sgn_2x4", "sgn",
                 sched({-0.2640092131936705, 2.18156267897504, 2.245977049120987,
                        -1.811175086662138, 1.811175086662138, -2.245977049120987,
                        -2.18156267897504, 0.2640092131936705},
                       false),
                 target_sgn(), 0.3, false});

    t.push_back({"sgn_2x8", "sgn",
                 sched({1.2302357850991548, 1.0336749243518562, 0.11198067732520582,
                        -0.15680734869559498, -0.9578602870885039, 2.0612195475315174,
                        0.8243803424562862, -0.6554966690623732, 0.6554966690623732,
                        -0.8243803424562862, -2.0612195475315174, 0.9578602870885039,
                        0.15680734869559498, -0.11198067732520582, -1.0336749243518562,
                        -1.2302357850991548},
                       false),
                 target_sgn(), 0.15, false});

    t.push_back({"sgn_2x14", "sgn",
                 sched({0.27882619783038065, 0.36281454618398395, -1.0026301277387055,
                        0.3541147797152542, 1.6243661292276912, 0.7417194190156123,
                        -1.156030172384029, 1.586825848651674, -0.5126707526970495,
                        0.26480940875731623, -0.7942611570978513, -0.8276672490175913,
                        0.3724217902363619, 1.6407210513498245, -1.6407210513498245,
                        -0.3724217902363619, 0.8276672490175913, 0.7942611570978513,
                        -0.26480940875731623, 0.5126707526970495, -1.586825848651674,
                        1.156030172384029, -0.7417194190156123, -1.6243661292276912,
                        -0.3541147797152542, 1.0026301277387055, -0.36281454618398395,
                        -0.27882619783038065},
                       false),
                 target_sgn(), 0.1, false});

    t.push_back({"step_1_10_2x17", "step",
                 sched({0.3359251571426454, -0.7053359438019324, -0.2460812016315209,
                        0.6290659385757417, 0.26513895221650835, 0.9253504197223081,
                        0.29770494357694177, 0.3113205753649513, -0.08150412617230154,
                        -1.0429304845709697, 0.6119290859635423, 0.2688690150870127,
                        -1.0037188566241908, -0.5852612343222781, 0.2002510054902895,
                        -0.6262504757168341, -1.0305371577280382, 0.0,
                        1.0305371577280382, 0.6262504757168341, -0.2002510054902895,
                        0.5852612343222781, 1.0037188566241908, -0.2688690150870127,
                        -0.6119290859635423, 1.0429304845709697, 0.08150412617230154,
                        -0.3113205753649513, -0.29770494357694177, -0.9253504197223081,
                        -0.26513895221650835, -0.6290659385757417, 0.2460812016315209,
                        0.7053359438019324, -0.3359251571426454},
                       true),
                 target_step(0.1), 0.02, true});

    {
        std::vector<double> half = {
            0.07320162044498352, 0.22243978812718435, -0.26371127484302086,
            0.26716122886345256, -2.656738804493763, -2.8179480550390674,
            0.3193690718221374, -0.018394471278165098, 0.8290246226574786,
            -0.5999852992281652, 2.098844136925592, 0.03820994975986922,
            2.7921501174003267, 0.29944961000660675, -0.055463135947150695,
            0.3918423962119306, 0.5972560381469758, 0.5646293285269941,
            0.40984657825729826, -2.851477247855508, 1.5382973389338346};
        std::vector<double> full;
        full.reserve(2 * half.size() + 1);
        for (std::size_t i = half.size(); i-- > 0;) full.push_back(-half[i]);
        full.push_back(0.0);
        full.insert(full.end(), half.begin(), half.end());
        t.push_back({"step_1_20_2x21", "step", sched(std::move(full), true),
                     target_step(0.05), 0.02, true});
    }

    t.push_back({"f_2x22", "f",
                 sched({-0.7919265959333694, -1.706573438268197, -0.06300361777976618,
                        0.14616034291649688, -0.945878016693397, -0.9831865238632601,
                        0.2723337690220768, -0.053752081558436623, -0.6855847965700638,
                        -0.5029559986160452, -0.8898394054092426, 1.2477726224572974,
                        -1.3842149465999596, -0.14604176338531175, -0.4717698081520115,
                        0.31556629410244413, -0.18845471639572597, -0.2160277263267179,
                        -0.2530703519014686, -0.6397299812266477, -0.4767079419048785,
                        -0.06737297231596824, 0.06737297231596824, 0.4767079419048785,
                        0.6397299812266477, 0.2530703519014686, 0.2160277263267179,
                        0.18845471639572597, -0.31556629410244413, 0.4717698081520115,
                        0.14604176338531175, 1.3842149465999596, -1.2477726224572974,
                        0.8898394054092426, 0.5029559986160452, 0.6855847965700638,
                        0.053752081558436623, -0.2723337690220768, 0.9831865238632601,
                        0.945878016693397, -0.14616034291649688, 0.06300361777976618,
                        1.706573438268197, 0.7919265959333694},
                       false),
                 [] {
                     TargetFunction f = target_example_f();
                     f.hi = 0.0;  // realized on the halved interval
                     return f;
                 }(),
                 0.0, true});

    return t;
}

}  // namespace

const std::vector<GoldenEntry>& golden_table() {
    static const std::vector<GoldenEntry> table = build_table();
    return table;
}

const GoldenEntry& golden(const std::string& name) {
    for (const GoldenEntry& e : golden_table())
        if (e.name == name) return e;
    throw std::out_of_range("no bundled schedule named '" + name + "'");
}

std::vector<const GoldenEntry*> golden_function_entries() {
    std::vector<const GoldenEntry*> out;
    for (const GoldenEntry& e : golden_table())
        if (e.family == "p2a" || e.family == "a2p" || e.family == "sgn")
            out.push_back(&e);
    return out;
}

void write_golden_files(const std::string& dir) {
    for (const GoldenEntry& e : golden_table())
        save_phase_file(e.schedule, dir + "/" + e.name + ".phase");
}

}  // namespace qsparith
