"""Regenerate the committed fixture corpus under fixtures/corpus/.

The corpus is deliberately desk-scale but exercises every retrieval shape:
structured and unstructured documents, oversize structural units (including
one of exactly 4200 characters), every lifecycle status the boosts care
about, EU member states with and without national documents, jurisdictions
registered with zero documents, and two documents sharing the short name
"AI Act" so ambiguous references stay testable.

Sentences are numbered so that any chunk-sized window of a body is unique
within its document — reconstruction oracles in the tests rely on that.

Run from the repository root:  python3 tools/make_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT / "src"))

from jurisrag.corpus import Corpus, DocType, Document, EntityRegistry, Status, save_manifest, validate_corpus

OUT_DIR = REPO_ROOT / "fixtures" / "corpus"

ENTITIES = (
    "European Union",
    "United States",
    "United Kingdom",
    "China",
    "Japan",
    "Singapore",
    "South Korea",
    "India",
    "Canada",
    "Australia",
    "Brazil",
    "Egypt",
    "Germany",
    "France",
    "Ireland",
    "Denmark",
    "Estonia",
    "Austria",
    "Czechia",
    "G7",
    "African Union",
)

ALIASES = {
    "EU": "European Union",
    "European": "European Union",
    "US": "United States",
    "USA": "United States",
    "American": "United States",
    "UK": "United Kingdom",
    "British": "United Kingdom",
    "Britain": "United Kingdom",
    "Chinese": "China",
    "Japanese": "Japan",
    "Singaporean": "Singapore",
    "Korea": "South Korea",
    "Korean": "South Korea",
    "Indian": "India",
    "Canadian": "Canada",
    "Australian": "Australia",
    "Brazilian": "Brazil",
    "Egyptian": "Egypt",
    "German": "Germany",
    "French": "France",
    "Irish": "Ireland",
    "Danish": "Denmark",
    "Estonian": "Estonia",
    "Austrian": "Austria",
    "Czech": "Czechia",
}

EU_MEMBER_STATES = ("Germany", "France", "Ireland", "Denmark", "Estonia", "Austria", "Czechia")


def pad_to(text: str, length: int, filler: str) -> str:
    """Append numbered filler sentences and cut to exactly ``length`` chars."""
    i = 1
    while len(text) < length:
        text += " " + filler.format(i=i)
        i += 1
    return text[:length]


def paragraphs(*parts: str) -> str:
    return "\n\n".join(parts)


def structured_body(units: list[tuple[str, str]]) -> tuple[str, list[list]]:
    """Concatenate unit texts; markers point at each unit's start offset."""
    body = ""
    markers: list[list] = []
    for label, text in units:
        markers.append([label, len(body)])
        body += text
    return body, markers


def unit(label: str, heading: str, *sentences: str, last: bool = False) -> tuple[str, str]:
    text = f"{label} — {heading}\n" + " ".join(sentences)
    if not last:
        text += "\n\n"
    return label, text


# ---- structured documents -------------------------------------------------


def eu_ai_act() -> Document:
    units = [
        unit(
            "Article 1",
            "Subject matter",
            "1. This Regulation lays down harmonised rules for the placing on the market, the putting into service and the use of artificial intelligence systems in the Union.",
            "2. It lays down prohibitions of certain artificial intelligence practices and specific requirements for high-risk AI systems.",
            "3. It establishes transparency rules for AI systems intended to interact with natural persons and rules on market monitoring and surveillance.",
        ),
        unit(
            "Article 5",
            "Prohibited artificial intelligence practices",
            "1. The following artificial intelligence practices shall be prohibited.",
            "2. Placing on the market or use of an AI system that deploys subliminal techniques beyond a person's consciousness in order to materially distort a person's behaviour in a manner that causes or is likely to cause physical or psychological harm is prohibited.",
            "3. The use of AI systems that exploit any of the vulnerabilities of a specific group of persons due to their age or disability is prohibited.",
            "4. The use of real-time remote biometric identification systems in publicly accessible spaces for the purpose of law enforcement is prohibited unless strictly necessary for one of the narrowly defined objectives listed in this Article.",
            "5. Social scoring of natural persons by public authorities over a certain period of time, leading to detrimental or unfavourable treatment, is prohibited.",
        ),
        unit(
            "Article 6",
            "Classification rules for high-risk AI systems",
            "1. An AI system shall be considered high-risk where it is intended to be used as a safety component of a product covered by the Union harmonisation legislation listed in Annex I.",
            "2. AI systems referred to in Annex III shall also be considered high-risk, including systems used in education, employment, essential services, law enforcement, migration and the administration of justice.",
            "3. A system listed in Annex III shall not be considered high-risk where it does not pose a significant risk of harm to the health, safety or fundamental rights of natural persons.",
        ),
        ("Article 9", _eu_ai_act_article_9()),
        unit(
            "Article 13",
            "Transparency and provision of information to deployers",
            "1. High-risk AI systems shall be designed and developed in such a way as to ensure that their operation is sufficiently transparent to enable deployers to interpret a system's output and use it appropriately.",
            "2. High-risk AI systems shall be accompanied by instructions for use that include the identity of the provider, the characteristics, capabilities and limitations of performance of the system, and the human oversight measures.",
            "3. The instructions shall specify the level of accuracy, robustness and cybersecurity against which the high-risk AI system has been tested and validated.",
        ),
        unit(
            "Article 16",
            "Obligations of providers of high-risk AI systems",
            "1. Providers of high-risk AI systems shall ensure that their systems are compliant with the requirements set out in this Chapter before placing them on the market.",
            "2. Providers shall have a quality management system in place, keep the technical documentation, and retain the logs automatically generated by their high-risk AI systems.",
            "3. Providers shall ensure that the high-risk AI system undergoes the relevant conformity assessment procedure prior to its placing on the market or putting into service.",
        ),
        unit(
            "Article 30",
            "Notifying authorities",
            "1. Each Member State shall designate or establish at least one notifying authority responsible for setting up and carrying out the necessary procedures for the assessment, designation and notification of conformity assessment bodies and for their monitoring.",
            "2. Notifying authorities shall be established, organised and operated in such a way that no conflict of interest arises with conformity assessment bodies.",
            "3. Notifying authorities shall safeguard the confidentiality of the information that they obtain.",
        ),
        unit(
            "Article 52",
            "Transparency obligations for certain AI systems",
            "1. Providers shall ensure that AI systems intended to interact with natural persons are designed and developed in such a way that natural persons are informed that they are interacting with an AI system, unless this is obvious from the circumstances.",
            "2. Deployers of an emotion recognition system or a biometric categorisation system shall inform the natural persons exposed thereto of the operation of the system.",
            "3. Deployers of an AI system that generates or manipulates image, audio or video content constituting a deep fake shall disclose that the content has been artificially generated or manipulated.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="eu-ai-act",
        entity="European Union",
        region="Europe",
        title="EU AI Act",
        year=2024,
        language="en",
        status=Status.ENACTED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
        short_names=("AI Act", "Artificial Intelligence Act"),
    )


def _eu_ai_act_article_9() -> str:
    base = (
        "Article 9 — Risk management system\n"
        "1. A risk management system shall be established, implemented, documented and maintained in relation to high-risk AI systems. "
        "2. The risk management system shall be understood as a continuous iterative process planned and run throughout the entire lifecycle of a high-risk AI system, requiring regular systematic review and updating. "
        "3. The process shall comprise the identification and analysis of the known and the reasonably foreseeable risks that the high-risk AI system can pose to health, safety or fundamental rights when used in accordance with its intended purpose. "
        "4. The risks identified shall be estimated and evaluated both for use in accordance with the intended purpose and under conditions of reasonably foreseeable misuse. "
        "5. The risk management measures shall be such that the relevant residual risk associated with each hazard, as well as the overall residual risk of the high-risk AI system, is judged to be acceptable."
    )
    filler = (
        "Review cycle {i}: the provider shall record the testing outcome, the mitigation adopted "
        "and the residual risk assessment for hazard register entry {i}."
    )
    # Unit span (including the trailing blank line) is exactly 2600 chars,
    # comfortably past the structured split threshold: two sub-chunks.
    return pad_to(base, 2598, filler) + "\n\n"


def gdpr() -> Document:
    units = [
        unit(
            "Article 1",
            "Subject-matter and objectives",
            "1. This Regulation lays down rules relating to the protection of natural persons with regard to the processing of personal data and rules relating to the free movement of personal data.",
            "2. This Regulation protects fundamental rights and freedoms of natural persons and in particular their right to the protection of personal data.",
        ),
        unit(
            "Article 5",
            "Principles relating to processing of personal data",
            "1. Personal data shall be processed lawfully, fairly and in a transparent manner in relation to the data subject.",
            "2. Personal data shall be collected for specified, explicit and legitimate purposes and not further processed in a manner that is incompatible with those purposes.",
            "3. Personal data shall be adequate, relevant and limited to what is necessary in relation to the purposes for which they are processed.",
            "4. The controller shall be responsible for, and be able to demonstrate compliance with, these principles.",
        ),
        unit(
            "Article 16",
            "Right to rectification",
            "1. The data subject shall have the right to obtain from the controller without undue delay the rectification of inaccurate personal data concerning him or her.",
            "2. Taking into account the purposes of the processing, the data subject shall have the right to have incomplete personal data completed, including by means of providing a supplementary statement.",
        ),
        ("Article 17", _gdpr_article_17()),
        unit(
            "Article 25",
            "Data protection by design and by default",
            "1. The controller shall, both at the time of the determination of the means for processing and at the time of the processing itself, implement appropriate technical and organisational measures designed to implement data-protection principles in an effective manner.",
            "2. The controller shall implement appropriate technical and organisational measures for ensuring that, by default, only personal data which are necessary for each specific purpose of the processing are processed.",
            "3. An approved certification mechanism may be used as an element to demonstrate compliance with these requirements.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="gdpr",
        entity="European Union",
        region="Europe",
        title="GDPR",
        year=2016,
        language="en",
        status=Status.ENACTED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
        short_names=("General Data Protection Regulation",),
    )


def _gdpr_article_17() -> str:
    base = (
        "Article 17 — Right to erasure ('right to be forgotten')\n"
        "1. The data subject shall have the right to obtain from the controller the erasure of personal data concerning him or her without undue delay, and the controller shall have the obligation to erase personal data without undue delay where one of the grounds in this Article applies. "
        "2. The grounds include that the personal data are no longer necessary in relation to the purposes for which they were collected or otherwise processed. "
        "3. The grounds include that the data subject withdraws consent on which the processing is based and there is no other legal ground for the processing. "
        "4. The grounds include that the data subject objects to the processing and there are no overriding legitimate grounds for the processing. "
        "5. The grounds include that the personal data have been unlawfully processed, or must be erased for compliance with a legal obligation in Union or Member State law to which the controller is subject. "
        "6. Where the controller has made the personal data public and is obliged to erase them, the controller, taking account of available technology and the cost of implementation, shall take reasonable steps, including technical measures, to inform controllers which are processing the personal data that the data subject has requested the erasure of any links to, or copy or replication of, those personal data. "
        "7. Paragraphs 1 and 6 shall not apply to the extent that processing is necessary for exercising the right of freedom of expression and information, for compliance with a legal obligation, for reasons of public interest in the area of public health, for archiving purposes in the public interest, scientific or historical research purposes or statistical purposes, or for the establishment, exercise or defence of legal claims."
    )
    filler = (
        "Erasure protocol {i}: the controller shall document the request, verify the identity of "
        "the data subject, assess ground {i} against the applicable exemptions, and notify each "
        "recipient to whom the personal data were disclosed in record {i}."
    )
    # Unit span of exactly 4200 characters: splits into windows starting at
    # 0, 1900 and 3800, each consecutive pair sharing exactly 100 characters.
    return pad_to(base, 4198, filler) + "\n\n"


def us_algorithmic_accountability_act() -> Document:
    units = [
        unit(
            "Section 2",
            "Definitions",
            "(1) The term 'automated decision system' means any system, software, or process that uses computation, the result of which serves as a basis for a decision or judgment.",
            "(2) The term 'augmented critical decision process' means a process, procedure, or activity that uses an automated decision system to make a critical decision.",
            "(3) The term 'covered entity' means any person, partnership, or corporation over which the Federal Trade Commission has jurisdiction and which meets the thresholds established in this Act.",
        ),
        unit(
            "Section 3",
            "Impact assessments of automated decision systems",
            "(a) The Commission shall require each covered entity to perform ongoing impact assessments of deployed automated decision systems and augmented critical decision processes.",
            "(b) Each impact assessment shall evaluate the privacy risks, the performance across demographic subgroups, and any material negative impact on consumers identified during testing.",
            "(c) Covered entities shall document any consultation with relevant internal stakeholders and independent auditors undertaken during the assessment.",
        ),
        unit(
            "Section 4",
            "Reporting and repository",
            "(a) Each covered entity shall submit to the Commission an annual summary report of the impact assessments performed under Section 3.",
            "(b) The Commission shall establish and maintain a publicly accessible repository presenting a limited subset of the information submitted, in a searchable format.",
            "(c) Nothing in this Section requires disclosure of trade secrets or other protected commercial information.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="us-aaa",
        entity="United States",
        region="North America",
        title="Algorithmic Accountability Act",
        year=2022,
        language="en",
        status=Status.PROPOSED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
    )


def canada_aida() -> Document:
    units = [
        unit(
            "Section 4",
            "Purposes",
            "The purposes of this Act are to regulate international and interprovincial trade and commerce in artificial intelligence systems by establishing common requirements applicable across Canada for the design, development and use of those systems, and to prohibit certain conduct in relation to artificial intelligence systems that may result in serious harm to individuals or harm to their interests.",
        ),
        unit(
            "Section 5",
            "Definitions",
            "(1) In this Act, 'artificial intelligence system' means a technological system that, autonomously or partly autonomously, processes data related to human activities through the use of a genetic algorithm, a neural network, machine learning or another technique in order to generate content or make decisions, recommendations or predictions.",
            "(2) 'High-impact system' means an artificial intelligence system that meets the criteria for a high-impact system that are established in regulations made under this Act.",
        ),
        unit(
            "Section 7",
            "Assessment of high-impact systems",
            "A person who is responsible for an artificial intelligence system must, in accordance with the regulations, assess whether it is a high-impact system, and must keep records describing the reasons supporting their assessment.",
        ),
        unit(
            "Section 8",
            "Risk mitigation measures",
            "A person who is responsible for a high-impact system must, in accordance with the regulations, establish measures to identify, assess and mitigate the risks of harm or biased output that could result from the use of the system, and must monitor compliance with those measures and their effectiveness.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="ca-aida",
        entity="Canada",
        region="North America",
        title="Artificial Intelligence and Data Act",
        year=2022,
        language="en",
        status=Status.PROPOSED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
        short_names=("AIDA",),
    )


def china_algo_provisions() -> Document:
    units = [
        unit(
            "Article 4",
            "General requirements",
            "Algorithmic recommendation service providers shall abide by laws and regulations, respect social morality and ethics, observe business and professional ethics, and follow the principles of fairness, openness, transparency, scientific rationality and honesty in providing algorithmic recommendation services in China.",
        ),
        unit(
            "Article 6",
            "Mainstream value orientation",
            "Algorithmic recommendation service providers shall uphold a mainstream value orientation, optimise algorithmic recommendation service mechanisms, actively transmit positive energy, and advance the use of algorithms for good.",
            "Providers shall not use algorithmic recommendation services to engage in activities prohibited by Chinese laws and administrative regulations or to transmit information prohibited by law.",
        ),
        unit(
            "Article 17",
            "User choice and opt-out",
            "Algorithmic recommendation service providers shall provide users with the option of choosing not to be targeted on the basis of their personal characteristics, and shall provide users with a convenient option to switch off algorithmic recommendation services.",
            "Where a user chooses to switch off algorithmic recommendation services, the provider shall immediately cease providing the related services.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="cn-algo-provisions",
        entity="China",
        region="Asia",
        title="Algorithmic Recommendation Provisions",
        year=2022,
        language="en",
        status=Status.ENACTED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
    )


def korea_ai_basic_act() -> Document:
    units = [
        unit(
            "Article 1",
            "Purpose",
            "The purpose of this Act is to protect the rights and dignity of the people of South Korea, improve their quality of life, and strengthen national competitiveness by establishing the foundation for the sound development of artificial intelligence and the creation of a basis of trust in Korean artificial intelligence.",
        ),
        unit(
            "Article 4",
            "Responsibilities of the State",
            "The State shall formulate and implement policies of South Korea necessary to pursue the safe development and use of artificial intelligence, ensure that the benefits of artificial intelligence are shared broadly, and prevent harms that may arise from artificial intelligence systems operated in Korea.",
            last=True,
        ),
    ]
    body, markers = structured_body(units)
    return Document(
        id="kr-ai-basic-act",
        entity="South Korea",
        region="Asia",
        title="AI Basic Act",
        year=2024,
        language="en",
        status=Status.ENACTED,
        doc_type=DocType.STRUCTURED,
        body=body,
        structure_markers=tuple((l, o) for l, o in markers),
        # Shares the short name "AI Act" with the EU document on purpose:
        # references that say only "the AI Act" are genuinely ambiguous.
        short_names=("AI Act",),
    )


# ---- unstructured documents -----------------------------------------------


def us_blueprint() -> Document:
    body = paragraphs(
        "Blueprint for an AI Bill of Rights. 1. The Blueprint identifies five principles that should guide the design, use and deployment of automated systems in the United States to protect the American public in the age of artificial intelligence.",
        "2. Safe and effective systems: the American public should be protected from unsafe or ineffective automated systems. 3. Automated systems should be developed with consultation from diverse communities, stakeholders and domain experts, and should undergo pre-deployment testing, risk identification and mitigation, and ongoing monitoring in the US.",
        "4. Algorithmic discrimination protections: the public should not face discrimination by algorithms, and systems should be used and designed in an equitable way. 5. Designers, developers and deployers of automated systems should take proactive and continuous measures to protect individuals and communities from algorithmic discrimination.",
        "6. Data privacy: the public should be protected from abusive data practices via built-in protections and should have agency over how data about them is used. 7. Notice and explanation: the public should know that an automated system is being used and understand how and why it contributes to outcomes that impact them.",
        "8. Human alternatives, consideration and fallback: the public should be able to opt out of automated systems in favour of a human alternative, where appropriate, and have access to a person who can quickly consider and remedy problems encountered in the United States.",
    )
    return Document(
        id="us-blueprint",
        entity="United States",
        region="North America",
        title="Blueprint for an AI Bill of Rights",
        year=2022,
        language="en",
        status=Status.WHITE_PAPER,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def japan_social_principles() -> Document:
    body = paragraphs(
        "Social Principles of Human-Centric AI. 1. Japan establishes these principles to realise a society in which artificial intelligence is used to bring about prosperity while human dignity is respected. 2. The principles form the basis of Japan's AI governance and guide government, industry and academia alike.",
        "3. Human-centric principle: the use of AI in Japan must not infringe upon fundamental human rights guaranteed by the Constitution and international norms. 4. Education and literacy principle: every member of Japanese society needs the literacy to understand and use AI appropriately.",
        "5. Privacy protection principle: personal data must be handled with care so that individuals are not disadvantaged. 6. Security assurance principle: the balance of benefits and risks of AI must be managed with constant attention to security across Japanese society.",
        "7. Fair competition principle: a fair competitive environment must be maintained as AI concentrates resources. 8. Fairness, accountability and transparency principle: decisions based on AI in Japan must be explainable and free of unfair discrimination. 9. Innovation principle: Japan pursues continued innovation through international cooperation and the liberalisation of data use.",
    )
    return Document(
        id="jp-social-principles",
        entity="Japan",
        region="Asia",
        title="Social Principles of Human-Centric AI",
        year=2019,
        language="en",
        status=Status.STRATEGY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def japan_governance_guidelines() -> Document:
    body = paragraphs(
        "AI Governance Guidelines. 1. These guidelines present action targets for the governance of artificial intelligence in Japan, together with practical examples of how Japanese businesses can implement them. 2. The guidelines are non-binding and support a risk-based, agile approach to AI governance rather than prescriptive regulation.",
        "3. Companies operating AI systems in Japan are encouraged to conduct impact assessments, set AI policies endorsed by management, and review them in light of incidents. 4. The guidelines recommend transparency towards users about system capabilities and limits, and continuous monitoring of deployed systems.",
        "5. Japan favours soft law instruments for AI governance: guidelines, standards and voluntary commitments that can evolve faster than statute. 6. The approach reflects Japan's emphasis on innovation, international interoperability and cooperation with like-minded partners.",
    )
    return Document(
        id="jp-governance-guidelines",
        entity="Japan",
        region="Asia",
        title="AI Governance Guidelines",
        year=2021,
        language="en",
        status=Status.POLICY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def uk_pro_innovation() -> Document:
    body = paragraphs(
        "A Pro-Innovation Approach to AI Regulation. 1. The United Kingdom sets out a principles-based framework for regulating artificial intelligence that relies on existing regulators rather than a single new AI statute. 2. The UK framework is deliberately agile: it avoids rigid legislative definitions that could quickly become outdated as the technology develops.",
        "3. Five cross-sectoral principles underpin the British approach: safety, security and robustness; appropriate transparency and explainability; fairness; accountability and governance; and contestability and redress. 4. UK regulators are expected to interpret and apply these principles within their existing remits, issuing guidance tailored to the risks that arise in their own sectors.",
        "5. The UK government initially applies the principles on a non-statutory basis, monitoring whether a statutory duty on regulators to have due regard to the principles becomes necessary. 6. A central risk function within government supports regulators in identifying and assessing cross-cutting AI risks across the United Kingdom and monitors how the framework performs in practice.",
        "7. The framework emphasises proportionality: regulatory interventions in the UK should be targeted at identified risks rather than at the technology itself, so that low-risk applications face minimal burden. 8. The white paper argues that a context-based approach lets British regulators respond to the actual use of an AI system rather than to its underlying method.",
        "9. To support coherence across the United Kingdom, the government commits to publishing cross-sectoral guidance, establishing regulatory sandboxes, and reviewing gaps in regulator coverage. 10. The UK also invests in assurance techniques and technical standards so that organisations can demonstrate that their systems meet the principles.",
        "11. Internationally, the UK promotes interoperability between regulatory regimes and convenes partners on frontier AI safety. 12. The UK positions this approach as a driver of investment, aiming to make Britain an attractive place to build and deploy AI while maintaining public trust in the technology.",
    )
    return Document(
        id="uk-pro-innovation",
        entity="United Kingdom",
        region="Europe",
        title="A Pro-Innovation Approach to AI Regulation",
        year=2023,
        language="en",
        status=Status.WHITE_PAPER,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def canada_admd() -> Document:
    body = paragraphs(
        "Directive on Automated Decision-Making. 1. This directive governs the use of automated decision systems by the Government of Canada, including systems that recommend or make administrative decisions about clients. 2. Canadian federal institutions must complete an algorithmic impact assessment before deploying any automated decision system.",
        "3. The directive scales its requirements to the assessed impact level: higher-impact automated decisions in Canada require peer review, human intervention and more extensive notice. 4. Institutions must provide meaningful explanations to affected individuals and publish information about the systems they operate.",
    )
    return Document(
        id="ca-admd",
        entity="Canada",
        region="North America",
        title="Directive on Automated Decision-Making",
        year=2019,
        language="en",
        status=Status.POLICY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def singapore_framework() -> Document:
    body = paragraphs(
        "Model AI Governance Framework. 1. Singapore's framework provides detailed and readily implementable guidance to private sector organisations deploying artificial intelligence at scale. 2. The Singaporean approach is voluntary and sector-agnostic, built on two guiding principles: decisions made or assisted by AI should be explainable, transparent and fair, and AI systems should be human-centric.",
        "3. The framework covers four areas: internal governance structures and measures, determining the level of human involvement in AI-augmented decision-making, operations management, and stakeholder interaction and communication. 4. Organisations in Singapore are encouraged to calibrate human oversight to the probability and severity of harm.",
        "5. Singapore complements the framework with implementation and self-assessment guides and with AI Verify, a testing toolkit that lets companies demonstrate responsible AI practices. 6. The framework is positioned as a living document, updated as technology and the Singaporean regulatory conversation evolve.",
    )
    return Document(
        id="sg-model-framework",
        entity="Singapore",
        region="Asia",
        title="Model AI Governance Framework",
        year=2020,
        language="en",
        status=Status.POLICY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def egypt_strategy() -> Document:
    body = paragraphs(
        "Egyptian National Artificial Intelligence Strategy. 1. Egypt adopts this national strategy to harness artificial intelligence for sustainable development and to position Egypt as a regional leader in AI within Africa and the Arab world. 2. The Egyptian strategy rests on four pillars: AI for government, AI for development, capacity building, and international activities.",
        "3. AI for government applies machine learning to improve public services and administrative efficiency across Egyptian institutions. 4. AI for development directs AI applications towards agriculture, healthcare and economic planning in Egypt.",
        "5. Capacity building develops Egyptian AI talent through education programmes, scholarships and partnerships with universities. 6. International activities position Egypt in regional and global AI governance discussions, including cooperation within the African Union and the League of Arab States.",
    )
    return Document(
        id="eg-ai-strategy",
        entity="Egypt",
        region="Africa",
        title="Egyptian National Artificial Intelligence Strategy",
        year=2021,
        language="en",
        status=Status.STRATEGY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def australia_ethics() -> Document:
    body = paragraphs(
        "AI Ethics Principles. 1. Australia's eight voluntary AI ethics principles help organisations design, develop and implement artificial intelligence responsibly. 2. The Australian principles are: human, societal and environmental wellbeing; human-centred values; fairness; privacy protection and security; reliability and safety; transparency and explainability; contestability; and accountability.",
        "3. Australian organisations are encouraged to apply the principles throughout the AI lifecycle, from design to deployment and review. 4. The principles complement existing Australian law and inform the government's ongoing consideration of mandatory guardrails for high-risk settings in Australia.",
    )
    return Document(
        id="au-ethics-principles",
        entity="Australia",
        region="Oceania",
        title="AI Ethics Principles",
        year=2019,
        language="en",
        status=Status.POLICY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def germany_strategy() -> Document:
    body = paragraphs(
        "AI Strategy of the German Federal Government. 1. Germany pursues three goals: making Germany and Europe a leading centre for artificial intelligence, ensuring responsible development and use of AI oriented towards the common good, and integrating AI into society through broad dialogue. 2. The German strategy funds research networks, supports small and medium-sized enterprises adopting AI, and strengthens data infrastructure in Germany within the European framework.",
    )
    return Document(
        id="de-ai-strategy",
        entity="Germany",
        region="Europe",
        title="AI Strategy of the German Federal Government",
        year=2018,
        language="en",
        status=Status.STRATEGY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def france_strategy() -> Document:
    body = paragraphs(
        "AI for Humanity. 1. France's national strategy for artificial intelligence concentrates public investment on health, environment, transport and defence, builds a network of interdisciplinary AI research institutes across France, and promotes open data. 2. The French strategy stresses that artificial intelligence developed in France and Europe must remain transparent, explainable and non-discriminatory.",
    )
    return Document(
        id="fr-ai-strategy",
        entity="France",
        region="Europe",
        title="AI for Humanity",
        year=2018,
        language="en",
        status=Status.STRATEGY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def brazil_strategy() -> Document:
    # Kept under one chunk's width on purpose: Brazil must yield exactly one
    # chunk so truncation behaviour with tiny candidate pools stays covered.
    body = (
        "Brazilian Artificial Intelligence Strategy. 1. Brazil's national AI strategy (EBIA) guides "
        "the development and responsible use of artificial intelligence in Brazil across nine thematic "
        "axes, including legislation and regulation, AI governance, education, workforce qualification, "
        "and public administration. 2. The Brazilian strategy favours a risk-based and principles-led "
        "approach, aligned with the OECD AI principles to which Brazil adheres."
    )
    return Document(
        id="br-ai-strategy",
        entity="Brazil",
        region="South America",
        title="Brazilian Artificial Intelligence Strategy",
        year=2021,
        language="en",
        status=Status.STRATEGY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
        short_names=("EBIA",),
    )


def g7_hiroshima() -> Document:
    body = paragraphs(
        "Hiroshima Process International Guiding Principles for Advanced AI Systems. 1. The G7 agrees a non-exhaustive list of guiding principles for organisations developing the most advanced artificial intelligence systems, including foundation models and generative AI. 2. The G7 principles call for identifying and mitigating risks across the AI lifecycle, publicly reporting capabilities and limitations, and investing in security controls.",
        "3. Organisations are urged by the G7 to develop content authentication and provenance mechanisms such as watermarking, to prioritise research on societal risks, and to advance international technical standards. 4. The Hiroshima Process complements national frameworks and is intended to promote safe, secure and trustworthy AI worldwide.",
    )
    return Document(
        id="g7-hiroshima",
        entity="G7",
        region="International",
        title="Hiroshima Process International Guiding Principles",
        year=2023,
        language="en",
        status=Status.POLICY,
        doc_type=DocType.UNSTRUCTURED,
        body=body,
    )


def build_corpus() -> Corpus:
    registry = EntityRegistry(
        entities=ENTITIES,
        aliases=dict(ALIASES),
        eu_member_states=frozenset(EU_MEMBER_STATES),
        eu_entity="European Union",
    )
    documents = (
        eu_ai_act(),
        gdpr(),
        us_algorithmic_accountability_act(),
        us_blueprint(),
        japan_social_principles(),
        japan_governance_guidelines(),
        uk_pro_innovation(),
        canada_aida(),
        canada_admd(),
        china_algo_provisions(),
        korea_ai_basic_act(),
        singapore_framework(),
        egypt_strategy(),
        australia_ethics(),
        germany_strategy(),
        france_strategy(),
        brazil_strategy(),
        g7_hiroshima(),
    )
    return Corpus(documents=documents, registry=registry)


def main() -> None:
    corpus = build_corpus()
    violations = validate_corpus(corpus)
    if violations:
        for violation in violations:
            print(f"  {violation}", file=sys.stderr)
        raise SystemExit("fixture corpus failed validation")

    gdpr_doc = corpus.document("gdpr")
    markers = dict(gdpr_doc.structure_markers)
    span = markers["Article 25"] - markers["Article 17"]
    assert span == 4200, f"GDPR Article 17 unit is {span} chars, want exactly 4200"

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    save_manifest(corpus, OUT_DIR / "manifest.jsonl")
    total = sum(len(d.body) for d in corpus.documents)
    print(f"wrote {len(corpus.documents)} documents ({total} chars) to {OUT_DIR}")


if __name__ == "__main__":
    main()
