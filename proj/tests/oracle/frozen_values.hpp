// Generated by generate_oracle.py; do not edit by hand.
#ifndef SQUIG_TESTS_FROZEN_VALUES_HPP
#define SQUIG_TESTS_FROZEN_VALUES_HPP

#include <complex>

namespace frozen {

struct NValue {
  int n;
  double value;
};

struct Pair {
  int n;
  std::complex<double> arg;
  std::complex<double> value;
};

inline constexpr NValue kPiN[] = {
    {3, 3.5332775005708999146},
    {4, 3.7081493546027438369},
    {5, 3.800600555953746966},
    {6, 3.8552425933199962621},
    {7, 3.8901747376256891336},
    {8, 3.9138432878131810307},
};

// (pi_n / 4) sec(pi / n)
inline constexpr NValue kRadius[] = {
    {3, 1.7666387502854499573},
    {4, 1.3110287771460599052},
    {5, 1.174450160620581079},
    {6, 1.1129126745223053846},
    {7, 1.0794420529431158792},
    {8, 1.0590783619739315943},
};

inline const Pair kPrimitive[] = {
    {3, {0.46193976625564337806, 0.19134171618254488586}, {0.46133486543083523117, 0.20195767395749320451}},
    {3, {0.9, 0.0}, {1.085721443912177336, 0.0}},
    {3, {0.5, 0.3}, {0.48797170466796218005, 0.31476291984216538868}},
    {3, {1.3022755533022626598, 1.0927389364671168547}, {0.76763980690867904759, 0.96392619355137527536}},
    {3, {0.52094453300079104656, 2.9544232590366241781}, {0.62989782950672706992, 1.3150229490580366017}},
    {3, {-0.49320325428609592722, 0.85839999415284515681}, {-0.70838330804265838509, 1.2698544128906061532}},
    {4, {0.46193976625564337806, 0.19134171618254488586}, {0.46001675331183776842, 0.19561279061885453812}},
    {4, {0.9, 0.0}, {1.0402534353786436838, 0.0}},
    {4, {0.5, 0.3}, {0.49096316606137132606, 0.30376904715215081955}},
    {4, {1.4722431864335456995, 0.85}, {0.87890354276801967482, 0.76364521428804941552}},
    {4, {1.5, 2.5980762113533159403}, {0.87349631778671559907, 0.91253832790763410069}},
    {4, {0.0015550877240225713987, 0.98999877863670649798}, {0.017491017770026628275, 1.4048373429103779165}},
    {5, {0.46193976625564337806, 0.19134171618254488586}, {0.46045503156036664238, 0.19278534105106037385}},
    {5, {0.9, 0.0}, {1.0055008717645869559, 0.0}},
    {5, {0.5, 0.3}, {0.49494448427328036237, 0.29941934310092395137}},
    {5, {1.5530272779924215224, 0.69145229322886035318}, {0.92827876608523332552, 0.62687248530088360024}},
    {5, {2.0073918190765746415, 2.229434476432182705}, {0.93781209803870971808, 0.69031131445496382546}},
    {5, {0.30710976410692789412, 0.94116076883292745084}, {0.42998192989122038415, 1.2785734625766453759}},
    {6, {0.46193976625564337806, 0.19134171618254488586}, {0.46108327522424084134, 0.19169107421756602911}},
    {6, {0.9, 0.0}, {0.98046545342281843306, 0.0}},
    {6, {0.5, 0.2}, {0.49861626231979573885, 0.20070124113953870659}},
    {6, {1.5974774553360442529, 0.58143424365363684617}, {0.95331695709236075028, 0.52864700262282662121}},
    {6, {2.2981333293569341056, 1.928362829059617979}, {0.96077160161842553779, 0.55699096312850342922}},
    {6, {0.49589755910710280086, 0.85684631695048878466}, {0.65932977734070738836, 1.1199753090665015325}},
    {7, {0.46193976625564337806, 0.19134171618254488586}, {0.46152272971734445849, 0.19134110226888557083}},
    {7, {0.9, 0.0}, {0.96236459047500001869, 0.0}},
    {7, {0.5, 0.2}, {0.49924991513544249781, 0.20007115311865615131}},
    {7, {1.6244737698364392458, 0.50108379649853716861}, {0.967322800510761084, 0.45533622099965347995}},
    {7, {2.4787163229479846158, 1.6899601741908660832}, {0.97175723466531618536, 0.46859481993194420649}},
    {7, {0.61794940768593394852, 0.77345880920744796769}, {0.79168085457144320809, 0.97847848675145743609}},
    {8, {0.46193976625564337806, 0.19134171618254488586}, {0.46176467266123633318, 0.19126919004105683397}},
    {8, {0.9, 0.0}, {0.94905916417286713801, 0.0}},
    {8, {0.5, 0.2}, {0.49964569550974579054, 0.19989684932289057359}},
    {8, {1.6420739046914160875, 0.43999237667428529599}, {0.97579616127333898452, 0.39894196573707678385}},
    {8, {2.5980762113533159403, 1.5}, {0.97824960291624820161, 0.40537922024575290753}},
    {8, {0.70058530417315432926, 0.69948569075900961361}, {0.87130447596721272412, 0.86098640696775266166}},
};

// (z, sin_n z) with z = F_n(s)
inline const Pair kSine[] = {
    {3, {0.74840626610129003872, 0.0}, {0.7, 0.0}},
    {3, {0.4996819824132078133, 0.21440620517275246692}, {0.5, 0.2}},
    {3, {0.72854975972493298745, 0.55241343847801282421}, {0.82272413359521671443, 0.475}},
    {3, {0.75849431001434677344, 1.153512968031766942}, {1.6728265158971454482, 1.8578620636934856653}},
    {4, {0.72869616490392776137, 0.0}, {0.7, 0.0}},
    {4, {0.49752512420930000105, 0.20633126108648031679}, {0.5, 0.2}},
    {4, {0.80677681917794874378, 0.44067824553120079105}, {0.87768555588572241832, 0.36354926074683528314}},
    {4, {0.89064275800070975742, 0.85625766633009515069}, {2.022542485937368509, 1.4694631307311828935}},
    {5, {0.71713990551794554048, 0.0}, {0.7, 0.0}},
    {5, {0.49784049906922693803, 0.20239849759173494208}, {0.5, 0.2}},
    {5, {0.8493760761527654793, 0.3642854417905169633}, {0.90350369048039589351, 0.2935661446562000529}},
    {5, {0.9387152867735402664, 0.67237727582842490804}, {2.1907667001096589347, 1.2043841852542882486}},
    {6, {0.71042077776998802674, 0.0}, {0.7, 0.0}},
    {6, {0.49861626231979573885, 0.20070124113953870659}, {0.5, 0.2}},
    {6, {0.87541675944450804684, 0.30914950880756311708}, {0.91762953497461487241, 0.24587809284739472423}},
    {6, {0.9600488347134516538, 0.5512873500590813679}, {2.2838636441065022151, 1.0168416076895005725}},
    {7, {0.70644282301211046511, 0.0}, {0.7, 0.0}},
    {7, {0.49924991513544249781, 0.20007115311865615131}, {0.5, 0.2}},
    {7, {0.89262302267810971154, 0.26761523218462074302}, {0.92618151657273242667, 0.21139488725849868407}},
    {7, {0.97126683169011446984, 0.46675235942095871964}, {2.3405871765993430063, 0.87843706020335680887}},
    {8, {0.70403992404116619417, 0.0}, {0.7, 0.0}},
    {8, {0.49964569550974579054, 0.19989684932289057359}, {0.5, 0.2}},
    {8, {0.90464184987824398288, 0.23526340883528893215}, {0.93174601638306892667, 0.18533580591532185446}},
    {8, {0.97801747861646632849, 0.40477280609698781184}, {2.3776412907378839168, 0.77254248593736860172}},
};

inline constexpr double kSin3Half = 0.48982587577826821707;
inline constexpr double kSin4Point7 = 0.67628486190412750547;
inline constexpr double kCos4Point7 = 0.94301697370028592547;
// sin_4(0.5) = F_4^{-1}(0.5)
inline constexpr double kSin4Half = 0.49538846006341751415;

}  // namespace frozen

#endif  // SQUIG_TESTS_FROZEN_VALUES_HPP
