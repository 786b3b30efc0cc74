// Euler-Mascheroni constant, first 1300 decimal digits after the point
// (truncated, not rounded). Cross-checked against two independent
// arbitrary-precision libraries; see tests/test_arith.cpp.

#include <string_view>

namespace robin::detail {

extern const std::string_view kEulerGammaDigits;

const std::string_view kEulerGammaDigits =
    "5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495"
    "1463144724980708248096050401448654283622417399764492353625350033374293733773767394279259525824709491"
    "6008735203948165670853233151776611528621199501507984793745085705740029921354786146694029604325421519"
    "0587755352673313992540129674205137541395491116851028079842348775872050384310939973613725530608893312"
    "6760017247953783675927135157722610273492913940798430103417771778088154957066107501016191663340152278"
    "9358679654972520362128792265559536696281763887927268013243101047650596370394739495763890657296792960"
    "1009015125195950922243501409349871228247949747195646976318506676129063811051824197444867836380861749"
    "4551698927923018773910729457815543160050021828440960537724342032854783670151773943987003023703395183"
    "2869000155819398804270741154222781971652301107356583396734871765049194181230004065469314299929777956"
    "9303100503086303418569803231083691640025892970890985486825777364288253954925873629596133298574739302"
    "3734388470703702844129201664178502487333790805627549984345907616431671031467107223700218107450444186"
    "6475913480366902553245862544222534518138791243457350136129778227828814894590986384600629316947188714"
    "9587525492366493520473243641097268276160877595088095126208404544477992299157248292516251278427659657";

}  // namespace robin::detail
