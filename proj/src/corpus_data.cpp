#include "carlson/verify.hpp"
#include <sstream>

namespace carlson {

// Same content as data/corpus.txt; a test asserts the two stay in sync.
static const char corpus_text[] =
    R"(# Check-value table: one record per line,
#   <fn> <arguments as complex literals> <expected-re> <expected-im>
# fn is one of rf rc rj rju rd rg; rju runs the third-kind integral with the
# admissibility checks overridden (the row below lands outside every class
# but still reproduces the matching rd value).

rf 1 2 0 1.3110287771461 0
rf i -i 0 1.8540746773014 0
rf -1+i i 0 0.79612586584234 -1.2138566698365
rf 2 3 4 0.58408284167715 0
rf i -i 2 1.0441445654064 0
rf -1+i i 1-i 0.93912050218619 -0.53296252018635

rc 0 0.25 3.1415926535898 0
rc 2.25 2 0.69314718055995 0
rc 0 i 1.1107207345396 -1.1107207345396
rc -i i 1.2260849569072 -0.34471136988768
rc 0.25 -2 0.23104906018665 0
rc i -1 0.77778596920447 0.19832484993429

rj 0 1 2 3 0.77688623778582 0
rj 2 3 4 5 0.14297579667157 0
rj 2 3 4 -1+i 0.13613945827771 -0.38207561624427
rj i -i 0 2 1.6490011662711 0
rj -1+i -1-i 1 2 0.94148358841220 0
rj i -i 0 1-i 1.8260115229009 1.2290661908643
rj -1+i -1-i 1 -3+i -0.61127970812028 -1.0684038390007
rju -1+i -2-i -i -1+i 1.8249027393704 -1.2218475784827
rj 2 3 4 -0.5 0.24723819703052 0
rj 2 3 4 -5 -0.12711230042964 0

rd 0 2 1 1.7972103521034 0
rd 2 3 4 0.16510527294261 0
rd i -i 2 0.65933854154220 0
rd 0 i -i 1.2708196271910 2.7811120159521
rd 0 -1+i i -1.8577235439239 -0.96193450888839
rd -2-i -i -1+i 1.8249027393704 -1.2218475784827

rg 0 16 16 3.1415926535898 0
rg 2 3 4 1.7255030280692 0
rg 0 i -i 0.42360654239699 0
rg -1+i i 0 0.44660591677018 0.70768352357515
rg -i -1+i i 0.36023392184473 0.40348623401722
rg 0 0.0796 4 1.0284758090288 0
)";

const std::vector<check_record>& embedded_corpus() {
    static const std::vector<check_record> records = [] {
        std::istringstream in(corpus_text);
        return parse_corpus(in);
    }();
    return records;
}

} // namespace carlson
