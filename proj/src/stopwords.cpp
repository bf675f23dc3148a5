#include <string_view>

#include "millionaire/question_bank.hpp"

namespace millionaire {
namespace {

// Function words only: articles, pronouns, auxiliaries, prepositions,
// conjunctions, interrogatives, quantifiers, frequent adverbs, and contraction
// fragments left by the tokenizer. Content words (nouns, most verbs,
// ordinals) are deliberately absent.
constexpr std::string_view kEnglish[] = {
    // articles, determiners, quantifiers
    "a", "an", "the", "this", "that", "these", "those", "some", "any", "each",
    "every", "either", "neither", "no", "none", "all", "both", "few", "many",
    "much", "more", "most", "less", "least", "several", "such", "own", "other",
    "another", "same", "enough", "lot", "lots", "plenty",
    // personal and possessive pronouns
    "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves",
    "you", "your", "yours", "yourself", "yourselves", "he", "him", "his",
    "himself", "she", "her", "hers", "herself", "it", "its", "itself", "they",
    "them", "their", "theirs", "themselves", "one", "ones", "oneself",
    // interrogatives and relatives
    "what", "which", "who", "whom", "whose", "when", "where", "why", "how",
    "whatever", "whichever", "whoever", "whomever", "whenever", "wherever",
    "however", "whether",
    // auxiliaries and copulas
    "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "done", "will", "would",
    "shall", "should", "can", "could", "may", "might", "must", "ought",
    "get", "gets", "got", "gotten",
    // prepositions
    "about", "above", "across", "after", "against", "along", "amid", "among",
    "amongst", "around", "as", "at", "before", "behind", "below", "beneath",
    "beside", "besides", "between", "beyond", "by", "despite", "down",
    "during", "except", "for", "from", "in", "inside", "into", "like", "near",
    "of", "off", "on", "onto", "out", "outside", "over", "past", "per",
    "since", "than", "through", "throughout", "till", "to", "toward",
    "towards", "under", "underneath", "unlike", "until", "up", "upon", "via",
    "with", "within", "without",
    // conjunctions
    "and", "but", "or", "nor", "so", "yet", "if", "because", "although",
    "though", "while", "whereas", "unless", "once", "then", "thus", "hence",
    "therefore", "also", "else", "otherwise",
    // frequent adverbs and particles
    "not", "only", "just", "very", "too", "quite", "rather", "really",
    "almost", "already", "always", "never", "ever", "often", "sometimes",
    "usually", "still", "even", "again", "ago", "here", "there", "now",
    "today", "soon", "later", "perhaps", "maybe", "indeed", "instead",
    "away", "back", "further", "furthermore", "moreover", "meanwhile",
    "nevertheless", "nonetheless", "anyway", "somewhat", "somehow",
    "especially", "mainly", "mostly", "nearly", "simply", "actually",
    "certainly", "probably", "generally", "currently", "well",
    // indefinite pronouns
    "anybody", "anyone", "anything", "anywhere", "everybody", "everyone",
    "everything", "everywhere", "nobody", "nothing", "nowhere", "somebody",
    "someone", "something", "somewhere",
    // contraction fragments and clitics
    "s", "t", "d", "ll", "m", "re", "ve", "don", "doesn", "didn", "isn",
    "aren", "wasn", "weren", "hasn", "haven", "hadn", "wouldn",
    "couldn", "shouldn", "mustn", "needn", "shan", "ain", "let", "lets",
    // quiz-framing and light verbs
    "following", "known", "called", "named", "considered", "said", "says",
    "say", "asked", "according", "make", "makes", "made", "take",
    "takes", "took", "go", "goes", "went", "come", "comes", "came", "become",
    "becomes", "became", "seem", "seems", "seemed", "use", "used", "uses",
    "etc", "e", "g", "ie", "eg", "vs", "thereof", "therein", "wherein",
    "whereby", "hereby", "thereby", "herein", "yes", "oh", "ok", "okay"};

}  // namespace

const StopwordList& StopwordList::english() {
  static const StopwordList list(kEnglish);
  return list;
}

}  // namespace millionaire
