#pragma once
// Generated by tests/oracles/gen_reference.py; do not edit.

#include <array>

namespace kahler::test {

struct ReferencePoint {
  double alpha, beta;
  int n;
  double u;
  // e^{ku} f^{(k)}(x), k = 1..4
  std::array<double, 4> d;
  // e^{2u} A, e^{2u} B, e^{2u} C
  std::array<double, 3> abc;
  // e^u R_{1 1bar}, e^u R_{i ibar}
  std::array<double, 2> ricci;
  double scal;
};

inline constexpr std::array<ReferencePoint, 48> kReference{{
    {2.0000000000000000000, 0.0, 2, 1e-6,
     {1.0000005000000833333, -0.50000033333341666667, 0.66666716666681666668, -1.5000012000004000001},
     {-0.50000033333341666667, 4.1666675000000416667e-7, -6.6666650555559444444e-13},
     {1.4999986666672916665, 1.5000000833333333333},
     2.9999980000008333331},
    {2.0000000000000000000, 0.0, 2, 1e-3,
     {1.0005000833333319444, -0.50033341667222083313, 0.66716681668333154702, -1.5012004000571404743},
     {-0.50033341667222083313, 4.1675000416527761247e-4, -6.6650559443584801568e-7},
     {1.4986672914667152683, 1.5000833333319444445},
     2.9980008330833916556},
    {2.0000000000000000000, 0.0, 2, 0.1,
     {1.0508331944775049624, -0.53417208138292803412, 0.71818314883135083213, -1.6240568856407541442},
     {-0.53417208138292803412, 0.042504026157977658170, -6.5093599020141375960e-3},
     {1.3727214340804065251, 1.5083319447750496240},
     2.8080890573167681099},
    {2.0000000000000000000, 0.0, 2, 1,
     {1.5819767068693264244, -0.92067359420779231895, 1.3309916544634532875, -3.1528399694572978862},
     {-0.92067359420779231895, 0.50265030107711874333, -0.53713345706433265703},
     {0.63212055882855767840, 1.5819767068693264244},
     1.6321205588285576784},
    {2.0000000000000000000, 0.0, 2, 2.5,
     {2.7235637245846300335, -1.8776942549154689780, 3.0017904770051371467, -7.6318302027020374469},
     {-1.8776942549154689780, 1.5671197447493209914, -2.5951754677902448048},
     {0.19611739939451546987, 1.6894254898338520134},
     0.81641699972477975903},
    {2.0000000000000000000, 0.0, 2, 10,
     {10.000454019910096878, -9.0008626584425919440, 17.002497229065170290, -49.009716724892500269},
     {-9.0008626584425919440, 8.9009080604336016318, -17.601952324778985124},
     {0.010040405937488611518, 1.9000454019910096878},
     0.20003631994380998788},
    {2.0000000000000000000, 0.0, 2, 50,
     {50.000000000000000000, -49.000000000000000000, 97.000000000000000000, -289.00000000000000000},
     {-49.000000000000000000, 48.980000000000000000, -97.920000000000000000},
     {4.0000000000000000019e-4, 1.9800000000000000000},
     0.040000000000000000000},
    {2.0000000000000000000, 0.0, 2, 300,
     {300.00000000000000000, -299.00000000000000000, 597.00000000000000000, -1.7890000000000000000e+3},
     {-299.00000000000000000, 298.99666666666666667, -597.98666666666666667},
     {1.1111111111111111111e-5, 1.9966666666666666667},
     6.6666666666666666667e-3},
    {2.0000000000000000000, 1.0000000000000000000, 3, 1e-6,
     {1.0000007500002083334, -0.25000033333347916669, 0.16666704166687916672, -0.12500070000048333347},
     {-0.25000033333347916669, 1.0416686979168776042e-7, -2.0833698263734461869e-14},
     {1.0000000833325520841, 1.0000005416665104167},
     2.9999991666656770849},
    {2.0000000000000000000, 1.0000000000000000000, 3, 1e-3,
     {1.0007502083541652774, -0.25033347919305590223, 0.16704187921805897723, -0.12570048347382450206},
     {-0.25033347919305590223, 1.0436981276104525029e-4, -2.1198109525466973428e-8},
     {1.0000825528598807472, 1.0005415104841682019},
     2.9991656786381786947},
    {2.0000000000000000000, 1.0000000000000000000, 3, 0.1,
     {1.0771040243394425865, -0.28481808479812499438, 0.20634338824129434527, -0.19997528788231136688},
     {-0.28481808479812499438, 0.012469065836317343526, -5.5843127928296650819e-4},
     {1.0012473390047661891, 1.0526685353108425698},
     2.9081963239972669832},
    {2.0000000000000000000, 1.0000000000000000000, 3, 1,
     {1.9774708835866580305, -0.75534781604240879259, 0.80790859425808884379, -1.4613126718835249407},
     {-0.75534781604240879259, 0.32831287634639842916, -0.27578874094364473281},
     {0.74738868198051746681, 1.4306200804053195154},
     1.9451781048358116831},
    {2.0000000000000000000, 1.0000000000000000000, 3, 2.5,
     {4.4257910524500238044, -2.3703622330914795809, 3.2581714665294558660, -7.3803286681580412410},
     {-2.3703622330914795809, 1.8254157390638004572, -2.8065777933725212479},
     {0.35543250027501571058, 1.8489364497531741122},
     0.99349812507952569278},
    {2.0000000000000000000, 1.0000000000000000000, 3, 10,
     {35.001589069685339072, -29.002905799571547585, 52.508195467529275824, -147.03126161153788083},
     {-29.002905799571547585, 28.474606782946177140, -55.934530007258233620},
     {0.037172890448700822865, 2.5739003277915431851},
     0.15326882304987561213},
    {2.0000000000000000000, 1.0000000000000000000, 3, 50,
     {675.00000000000000000, -649.00000000000000000, 1.2725000000000000000e+3, -3.7670000000000000000e+3},
     {-649.00000000000000000, 648.49851851851851852, -1.2960036894586894587e+3},
     {1.8556935414485272037e-3, 2.9037321937321937322},
     8.6750237729089361787e-3},
    {2.0000000000000000000, 1.0000000000000000000, 3, 300,
     {2.2800000000000000000e+4, -2.2649000000000000000e+4, 4.5147500000000000000e+4, -1.3514200000000000000e+5},
     {-2.2649000000000000000e+4, 2.2648499956140350877e+4, -4.5296001480190542582e+4},
     {5.4827927845037764282e-5, 2.9834431276867665853},
     2.6206863637628394615e-4},
    {3.0000000000000000000, 0.50000000000000000000, 2, 1e-6,
     {1.0000005833334537037, -0.41666700925936400464, 0.49074121643536006947, -0.99652885509303487020},
     {-0.41666700925936400464, 3.1712976253858595143e-7, -4.6797841294149999716e-13},
     {1.2499990601855115740, 1.2500001550925706019},
     2.4999982777784753085},
    {3.0000000000000000000, 0.50000000000000000000, 2, 1e-3,
     {1.0005834537089104551, -0.41700936401616402628, 0.49121661009690225856, -0.99760553495490716224},
     {-0.41700936401616402628, 3.1726254428449804947e-4, -4.6799624538150712137e-7},
     {1.2490605115354229271, 1.2501550706074319486},
     2.4982784751354267181},
    {3.0000000000000000000, 0.50000000000000000000, 2, 0.1,
     {1.0595420862585462941, -0.45198480227945467257, 0.54008641820155509080, -1.1087670015597660134},
     {-0.45198480227945467257, 0.033047724936757755709, -4.6948488555575214975e-3},
     {1.1592415918923571956, 1.2652947165049685569},
     2.3345810227625724107},
    {3.0000000000000000000, 0.50000000000000000000, 2, 1,
     {1.7072715332625380923, -0.87415444279696909897, 1.1674132476875145387, -2.6006013269919430283},
     {-0.87415444279696909897, 0.45501939654051556812, -0.46627015167502916192},
     {0.58714821103604124236, 1.3870184023255454611},
     1.3209034292686230094},
    {3.0000000000000000000, 0.50000000000000000000, 2, 2.5,
     {3.2298090037986917730, -2.0435471696332492558, 3.1115946740071814976, -7.6338613253436674491},
     {-2.0435471696332492558, 1.6693318184546681437, -2.7118157697944559473},
     {0.20565787188557490094, 1.5418054650382612958},
     0.62925578541932730182},
    {3.0000000000000000000, 0.50000000000000000000, 2, 10,
     {16.041833626826403092, -13.960801446765381502, 25.921177790618228785, -73.846825631900097069},
     {-13.960801446765381502, 13.770820712469809870, -27.167929324473563755},
     {0.014844930947055387714, 1.8318131303530690180},
     0.12132103406709948885},
    {3.0000000000000000000, 0.50000000000000000000, 2, 50,
     {146.51212695215112248, -142.30895354784495864, 280.45438627066966063, -833.07614382219103533},
     {-142.30895354784495864, 142.22802452727165172, -284.29493917527000863},
     {7.3037008663125936860e-4, 1.9618778090428149067},
     0.013564315305628397493},
    {3.0000000000000000000, 0.50000000000000000000, 2, 300,
     {2.0280748754664198346e+3, -2.0180249998452989443e+3, 4.0260167080226471648e+3, -1.2058000152051469570e+4},
     {-2.0180249998452989443e+3, 2.0179917828758198561e+3, -4.0359171865452002493e+3},
     {2.1824660724468069993e-5, 1.9933944579692204109},
     9.8507146867853642603e-4},
    {3.0000000000000000000, 2.0000000000000000000, 5, 1e-6,
     {1.0000008333336203704, -0.16666692592607407411, 0.074074296296474074137, -3.1111145555570529104e-7},
     {-0.16666692592607407411, 4.6296432098815552129e-8, 3.0863983470518941474e-14},
     {1.0000004074066296301, 1.0000007037036296296},
     4.9999992222204938290},
    {3.0000000000000000000, 2.0000000000000000000, 5, 1e-3,
     {1.0008336204166683637, -0.16692607411358425891, 0.074296474137046825264, -3.1145570532103282412e-4},
     {-0.16692607411358425891, 4.6432148888088282736e-5, 3.0650148573014170171e-8},
     {1.0004066301346095466, 1.0007036296432720647},
     4.9992204956991487070},
    {3.0000000000000000000, 2.0000000000000000000, 5, 0.1,
     {1.0862501651061912408, -0.19411397785942502882, 0.098138014303670006204, -0.034708303744291041707},
     {-0.19411397785942502882, 6.0380329612778590270e-3, 9.5739492549399523743e-5},
     {1.0334457919085262398, 1.0696426621921646085},
     4.9066919032762371727},
    {3.0000000000000000000, 2.0000000000000000000, 5, 1,
     {2.1678940057098176927, -0.61715478556021204195, 0.54644747336120010373, -0.83564962663357214444},
     {-0.61715478556021204195, 0.23436262479937493455, -0.17061611108025942426},
     {0.96924792055106913055, 1.6387176382881165084},
     3.5688140580641664678},
    {3.0000000000000000000, 2.0000000000000000000, 5, 2.5,
     {5.6236547276145601617, -2.4648726876797250021, 3.0404301948291742275, -6.3660718018001512429},
     {-2.4648726876797250021, 1.7991736333930818627, -2.6465009611309056930},
     {0.58642373936410143120, 2.3895812907663089912},
     1.8741374763443488361},
    {3.0000000000000000000, 2.0000000000000000000, 5, 10,
     {80.374019345203371202, -61.599038159431468237, 107.31405948073700017, -292.84436244458621326},
     {-61.599038159431468237, 60.101529212793628134, -117.43097402010007722},
     {0.086399213087152687611, 3.9117732421363180846},
     0.19927963460085126179},
    {3.0000000000000000000, 2.0000000000000000000, 5, 50,
     {5.5129629629629629630e+3, -5.2008518518518518519e+3, 1.0101370370370370370e+4, -2.9715000000000000000e+4},
     {-5.2008518518518518519e+3, 5.1949597583946055562e+3, -1.0378357552096940743e+4},
     {4.9870800769868701730e-3, 4.7358079870199833947},
     3.4521039192091590602e-3},
    {3.0000000000000000000, 2.0000000000000000000, 5, 300,
     {1.0303000000000000000e+6, -1.0200990000000000000e+6, 2.0300643333333333333e+6, -6.0699927777777777778e+6},
     {-1.0200990000000000000e+6, 1.0200653332353036332e+6, -2.0400635551634367552e+6},
     {1.5249100402363855871e-4, 4.9537953410987027073},
     1.9247387111377817570e-5},
    {5.2500000000000000000, 5.0000000000000000000, 3, 1e-6,
     {1.0000009761909185564, -0.023809615268419636151, -0.043839755371938458472, 0.13427285167596646051},
     {-0.023809615268419636151, -4.4406630394449798547e-8, 1.3004350248347093723e-13},
     {0.095238635676037766117, 0.095238413076333009395},
     0.28571518518372669561},
    {5.2500000000000000000, 5.0000000000000000000, 3, 1e-3,
     {1.0009766329594722681, -0.023901072740196413378, -0.043836952995062220365, 0.13436767818515042955},
     {-0.023901072740196413378, -4.4385460475919617216e-5, 1.2999418946268561594e-7},
     {0.095778078799614710806, 0.095555924847170431361},
     0.28661229935257306563},
    {5.2500000000000000000, 5.0000000000000000000, 3, 0.1,
     {1.1021620130647271208, -0.033900217596792783449, -0.043006114520752987767, 0.14337550711289471247},
     {-0.033900217596792783449, -4.1917989586937214119e-3, 1.2477245812974092174e-3},
     {0.14494106244009377998, 0.12693641267314977565},
     0.36223293080233024826},
    {5.2500000000000000000, 5.0000000000000000000, 3, 1,
     {2.5560988033227606810, -0.26097348235308257975, 0.069164883394282815421, 0.095412408526263993384},
     {-0.26097348235308257975, 0.026877715729048507983, 0.045036512486555178161},
     {0.33765376569337048686, 0.40419670946509124065},
     0.45747146761972131088},
    {5.2500000000000000000, 5.0000000000000000000, 3, 2.5,
     {8.9109097899921071840, -2.0710054806880166575, 1.8025918494125460656, -2.8557338629309080796},
     {-2.0710054806880166575, 1.2128085969150366391, -1.4490503513859147174},
     {0.29815737313459434308, 0.81966340872531557318},
     0.22650225094444439971},
    {5.2500000000000000000, 5.0000000000000000000, 3, 10,
     {524.76811373360685020, -317.98151821720882622, 496.98818480974629164, -1.2630461286505759887e+3},
     {-317.98151821720882622, 304.29451067933612534, -585.66725372118765841},
     {0.073693156834765555403, 1.8840245911225381141},
     7.5367561485215271203e-3},
    {5.2500000000000000000, 5.0000000000000000000, 3, 50,
     {1.1886270434342017170e+6, -1.0595452785363698563e+6, 2.0016903998579695589e+6, -5.7811067655743577350e+6},
     {-1.0595452785363698563e+6, 1.0572089466805508850e+6, -2.1099566614627319124e+6},
     {5.5691117990501202665e-3, 2.6923075324213344139},
     4.5732572676475363694e-6},
    {5.2500000000000000000, 5.0000000000000000000, 3, 300,
     {3.3805414728511929553e+10, -3.3140934832111203665e+10, 6.5628273959408916920e+10, -1.9558837203359781969e+11},
     {-3.3140934832111203665e+10, 3.3138757993793418505e+10, -6.6273197967598563122e+10},
     {1.8244735691786537029e-4, 2.9443079443069267776},
     1.7446607134573756228e-10},
    {1.2500000000000000000, 1.0000000000000000000, 2, 1e-6,
     {1.0000009000002833334, -0.10000033333351666671, -0.13333303333308333326, 0.69999959999946666648},
     {-0.10000033333351666671, -1.4333301933332143332e-7, 6.4266555791184129724e-13},
     {0.30000146666376367009, 0.30000088333275733377},
     0.60000183999490267454},
    {1.2500000000000000000, 1.0000000000000000000, 2, 1e-3,
     {1.0009002833666652772, -0.10033351670555694369, -0.13303308326110456464, 0.69959946647616508127},
     {-0.10033351670555694369, -1.4301932142282037085e-4, 6.4155864076337057798e-7},
     {0.30146376708937757235, 0.30088275776680679051},
     0.60183491053213680819},
    {1.2500000000000000000, 1.0000000000000000000, 2, 0.1,
     {1.0928665222566051609, -0.13520568684724317053, -0.10076046811273954685, 0.65447367077275429949},
     {-0.13520568684724317053, -0.011180428180318620119, 5.3859682018163325476e-3},
     {0.42074981675155492983, 0.38297581941892426792},
     0.74001554640595221494},
    {1.2500000000000000000, 1.0000000000000000000, 2, 1,
     {2.2147673896170569941, -0.65615234914317867677, 0.49405875813487017757, -0.44639629333926117343},
     {-0.65615234914317867677, 0.18942470722225195495, -0.038027548246468851282},
     {0.53997517174546421902, 0.85181797671059626565},
     0.68459453185276750029},
    {1.2500000000000000000, 1.0000000000000000000, 2, 2.5,
     {5.4471274491692600669, -2.6659630199970859427, 3.4120000602440470976, -7.2294277474316435174},
     {-2.6659630199970859427, 1.9342394894986419828, -2.7814407819332083191},
     {0.25980162241181838822, 1.2227588231671853467},
     0.31107827417396882820},
    {1.2500000000000000000, 1.0000000000000000000, 2, 10,
     {50.002270099550484388, -41.004131684248920969, 73.811614410607739144, -205.84418854352510916},
     {-41.004131684248920969, 40.184540302168008159, -78.801378002269904408},
     {0.024333323686651726886, 1.7311565131021207989},
     0.037325261006210553764},
    {1.2500000000000000000, 1.0000000000000000000, 2, 50,
     {1.0500000000000000000e+3, -1.0090000000000000000e+3, 1.9778000000000000000e+3, -5.8538000000000000000e+3},
     {-1.0090000000000000000e+3, 1.0081990476190476190e+3, -2.0148118002322880372e+3},
     {1.1435375498603169209e-3, 1.9414401858304297329},
     1.8768818129245284974e-3},
    {1.2500000000000000000, 1.0000000000000000000, 2, 300,
     {3.6300000000000000000e+4, -3.6059000000000000000e+4, 7.1877800000000000000e+4, -2.1515380000000000000e+5},
     {-3.6059000000000000000e+4, 3.6058199972451790634e+4, -7.2114802545408822285e+4},
     {3.3058420420815467677e-5, 1.9900413794680109278},
     5.4959248438332731512e-5},
}};

}  // namespace kahler::test
