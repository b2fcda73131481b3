// Porter stemmer, ported from the classic reference implementation
// (including the later departures: length<=2 words untouched, -bli -> -ble,
// -logi -> -log). The buffer b holds the word; k indexes its last letter and
// j marks the end of the stem during suffix tests.
#include "folkweave/porter.hpp"

namespace folkweave {

namespace {

class Stemmer {
public:
    explicit Stemmer(std::string word) : b(std::move(word)), k(static_cast<int>(b.size()) - 1) {}

    std::string run() {
        if (k <= 1) return b;
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
        return b.substr(0, static_cast<std::size_t>(k) + 1);
    }

private:
    std::string b;
    int k;
    int j = 0;

    bool cons(int i) const {
        switch (b[static_cast<std::size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Number of consonant-vowel sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool doublec(int i) const {
        if (i < 1) return false;
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
        return cons(i);
    }

    // True when b[i-2..i] is consonant-vowel-consonant and the final
    // consonant is not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[static_cast<std::size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len), s) != 0)
            return false;
        j = k - len;
        return true;
    }

    void setto(std::string_view s) {
        b.erase(static_cast<std::size_t>(j) + 1);
        b.append(s);
        k = static_cast<int>(b.size()) - 1;
    }

    void r(std::string_view s) {
        if (m() > 0) setto(s);
    }

    void step1ab() {
        if (b[static_cast<std::size_t>(k)] == 's') {
            if (ends("sses")) k -= 2;
            else if (ends("ies")) setto("i");
            else if (b[static_cast<std::size_t>(k - 1)] != 's') --k;
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            b.erase(static_cast<std::size_t>(k) + 1);
            if (ends("at")) setto("ate");
            else if (ends("bl")) setto("ble");
            else if (ends("iz")) setto("ize");
            else if (doublec(k)) {
                --k;
                b.erase(static_cast<std::size_t>(k) + 1);
                char ch = b[static_cast<std::size_t>(k)];
                if (ch == 'l' || ch == 's' || ch == 'z') {
                    ++k;
                    b.push_back(ch);
                }
            } else if (m() == 1 && cvc(k)) setto("e");
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b[static_cast<std::size_t>(k)] = 'i';
    }

    void step2() {
        if (k == 0) return;
        switch (b[static_cast<std::size_t>(k - 1)]) {
            case 'a':
                if (ends("ational")) { r("ate"); break; }
                if (ends("tional")) { r("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { r("ence"); break; }
                if (ends("anci")) { r("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { r("ize"); break; }
                break;
            case 'l':
                if (ends("bli")) { r("ble"); break; }
                if (ends("alli")) { r("al"); break; }
                if (ends("entli")) { r("ent"); break; }
                if (ends("eli")) { r("e"); break; }
                if (ends("ousli")) { r("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { r("ize"); break; }
                if (ends("ation")) { r("ate"); break; }
                if (ends("ator")) { r("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { r("al"); break; }
                if (ends("iveness")) { r("ive"); break; }
                if (ends("fulness")) { r("ful"); break; }
                if (ends("ousness")) { r("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { r("al"); break; }
                if (ends("iviti")) { r("ive"); break; }
                if (ends("biliti")) { r("ble"); break; }
                break;
            case 'g':
                if (ends("logi")) { r("log"); break; }
                break;
        }
    }

    void step3() {
        switch (b[static_cast<std::size_t>(k)]) {
            case 'e':
                if (ends("icate")) { r("ic"); break; }
                if (ends("ative")) { r(""); break; }
                if (ends("alize")) { r("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { r("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { r("ic"); break; }
                if (ends("ful")) { r(""); break; }
                break;
            case 's':
                if (ends("ness")) { r(""); break; }
                break;
        }
    }

    void step4() {
        if (k == 0) return;
        switch (b[static_cast<std::size_t>(k - 1)]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j >= 0 &&
                    (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't'))
                    break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (m() > 1) {
            k = j;
            b.erase(static_cast<std::size_t>(k) + 1);
        }
    }

    void step5() {
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
        b.erase(static_cast<std::size_t>(k) + 1);
    }
};

}  // namespace

std::string porter_stem(std::string_view word) {
    return Stemmer(std::string(word)).run();
}

}  // namespace folkweave
