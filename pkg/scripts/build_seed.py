#!/usr/bin/env python3
"""Regenerate the packaged seed data files from their source tables.

The repository file is emitted through save_repository so it is always in
canonical form; run this after editing any of the tables below.
"""

from __future__ import annotations

import json
from pathlib import Path

from smeforge.metamodel import DeonticValue, FragmentKind, slugify
from smeforge.repository import (
    DeonticCell,
    MethodFragment,
    Origin,
    PrecedenceConstraint,
    Repository,
    RepositoryMeta,
    save_repository,
)

SEED_DIR = Path(__file__).resolve().parents[1] / "src" / "smeforge" / "seed"

STUB_NOTE = "Stub; defined in the baseline OPF repository."

# name, aliases, description
PROCESSES = [
    ("Requirements Engineering", [], "Elicit, specify, and validate what the system must do, including the service-level guarantees it depends on."),
    ("Environments Engineering", [], "Assess the existing infrastructure and its fitness for a service-oriented solution."),
    ("Management", ["Plan Project"], "Preliminary project planning: schedule, risks, resources, and the migration roadmap."),
    ("Develop Governance", ["Develop SOA Governance Model"], "Establish and keep enforcing the policies, responsibilities, and quality metrics that steer service development."),
    ("Design Services", [], "Turn business process models into a coherent set of candidate services."),
    ("Service-Oriented Architecture Engineering", [], "Organize services into a layered reference architecture and realize quality attributes."),
    ("Implementation", ["Develop Services"], "Build the services the solution needs, by coding, wrapping, or composition."),
    ("Reuse Engineering", [], "Find and select already-published services that fit the consumer's needs."),
    ("Deployment", ["Enable Service-Oriented Solution"], "Move services into an operational environment and verify the assembled whole."),
    ("Maintenance", [], "Keep deployed services observed and the composition healthy over time."),
]

OPF_PROCESSES = [
    ("Project Management", []),
]

PRODUCERS = [
    ("Service Consumer", []),
    ("Service Provider", []),
    ("Requirement Engineer", ["Requirements Engineer"]),
    ("Database Administrator", []),
    ("Network Administrator", []),
    ("Project Manager", []),
    ("Service Designer", ["Service Modeler"]),
    ("Service Developer", []),
    ("Service Tester", []),
    ("Business Process Engineer", []),
    ("Service Installer", []),
    ("Orchestrator/Choreographer Tester", []),
]

TECHNIQUES = [
    ("Create SLA Contract", []),
    ("Create a Readiness Report", ["Evaluate Environment with SOA Maturity Model Criteria"]),
    ("Make Transition Plan", []),
    ("Create Governance Model", []),
    ("Top-Down", ["Top-Down Analysis"]),
    ("Bottom-Up", ["Bottom-Up Analysis"]),
    ("Meet-In-The Middle", ["Meet-In-the Middle Analysis"]),
    ("Add Specific Details to Service", ["Add Specific Details to Services", "Add Specific Details to the Service"]),
    ("Classify Service", []),
    ("Evaluate Service Granularity", []),
    ("Evaluate Service Coupling", []),
    ("Evaluate Service Cohesion", []),
    ("Implement Services", []),
    ("Perform WSDL Testing", []),
    ("Implement Wrapper", ["Implement Wrappers"]),
    ("Compose Web Services", ["Compose Web Service"]),
    ("Search Web Services", []),
    ("Import Web Services into the Common Web Service Repository", []),
    ("Perform Orchestration/Choreography Testing", ["Perform Orchestration or Choreography Testing"]),
    ("Monitor QoS of Web Services", ["Monitor the QoS of Web Services"]),
    ("Reconfigure Composite Web Services", []),
]

OPF_TECHNIQUES = [
    ("Existing Techniques", []),
]

WORK_PRODUCTS = [
    ("Document of Service Level Agreement Contract", []),
    ("Report of Readiness Assessment", []),
    ("Transition Plan", []),
    ("List of Transition Issues", ["List of Migration Issues"]),
    ("Cost and Effort of Selected Strategies", []),
    ("Documented (Textural Description) Governance Model", ["Documented Governance Model"]),
    ("Policies", []),
    ("Executive Mechanisms", []),
    ("Quality Indicators and Measurement Metrics", []),
    ("Service Models", []),
    ("Service Interface Signatures", ["Services Interfaces Signatures", "Service Interfaces Signatures"]),
    ("Software Components Specification", ["Realizer Components"]),
    ("Service Dependency", []),
    ("Classified Service Model", []),
    ("Refined Service Model", []),
    ("Executable Web Services", []),
    ("Services WSDLs and WS-Policy", []),
    ("Services WSDLs", []),
    ("Composite Services as Business Process", []),
    ("Deployed and Published Services", []),
    ("Test Cases", []),
    ("Results of Running Test Cases", ["Result of Running Test Cases"]),
    ("Statically Reports of QoS", ["Static Reports of QoS"]),
    ("Service Metering", []),
    ("Billing Report and Defect Report", []),
    ("New Discovered Web Services", []),
]

# name, aliases, owner process, description, producers, techniques, work products
TASKS = [
    (
        "Specify Service Level Agreement",
        ["Specify Service Level Agreement (SLA)", "Specify SLA"],
        "Requirements Engineering",
        "Contract the quality guarantees a provider owes its consumers.",
        ["Service Consumer", "Service Provider", "Requirement Engineer"],
        ["Create SLA Contract"],
        ["Document of Service Level Agreement Contract"],
    ),
    (
        "Evaluate Environment Readiness",
        [],
        "Environments Engineering",
        "Judge whether code, data, infrastructure, and people are ready for a move to services.",
        ["Requirement Engineer", "Database Administrator", "Network Administrator"],
        ["Create a Readiness Report"],
        ["Report of Readiness Assessment"],
    ),
    (
        "Plan Transition",
        [],
        "Management",
        "Pick migration strategies for the legacy estate and schedule the move.",
        ["Service Consumer", "Service Provider", "Project Manager"],
        ["Make Transition Plan"],
        ["Transition Plan", "List of Transition Issues", "Cost and Effort of Selected Strategies"],
    ),
    (
        "Develop Governance Model for Current Iteration",
        ["Develop Governance for Current Iteration"],
        "Develop Governance",
        "Agree responsibilities, policies, and measurable quality indicators for the iteration.",
        ["Service Consumer", "Service Provider", "Requirement Engineer"],
        ["Create Governance Model"],
        [
            "Documented (Textural Description) Governance Model",
            "Policies",
            "Executive Mechanisms",
            "Quality Indicators and Measurement Metrics",
        ],
    ),
    (
        "Identify Services",
        [],
        "Design Services",
        "Derive candidate services from the business processes in scope.",
        ["Service Designer"],
        ["Top-Down", "Bottom-Up", "Meet-In-The Middle"],
        ["Service Models", "Service Interface Signatures"],
    ),
    (
        "Specify Details of Services",
        ["Specify Detail of Services"],
        "Design Services",
        "Pin down interfaces, operations, parameters, messages, and dependencies of each candidate service.",
        ["Service Designer"],
        ["Add Specific Details to Service"],
        ["Service Interface Signatures", "Software Components Specification", "Service Dependency"],
    ),
    (
        "Classify Services",
        [],
        "Design Services",
        "Sort services by granularity and usage context into a non-overlapping scheme.",
        ["Service Designer"],
        ["Classify Service"],
        ["Classified Service Model"],
    ),
    (
        "Evaluate Quality of Designed Services",
        [],
        "Design Services",
        "Rework the service model for granularity, coupling, cohesion, and reuse.",
        ["Service Designer"],
        ["Evaluate Service Granularity", "Evaluate Service Coupling", "Evaluate Service Cohesion"],
        ["Refined Service Model"],
    ),
    (
        "Implement and Test Necessary Services",
        [],
        "Implementation",
        "Code and test the services no existing offering covers.",
        ["Service Developer", "Service Tester"],
        ["Implement Services", "Perform WSDL Testing"],
        ["Executable Web Services", "Services WSDLs and WS-Policy"],
    ),
    (
        "Implement Necessary Wrappers",
        [],
        "Implementation",
        "Expose valuable legacy logic through standard service interfaces.",
        ["Service Developer", "Service Tester"],
        ["Implement Wrapper"],
        ["Executable Web Services", "Services WSDLs"],
    ),
    (
        "Develop Necessary Composite Web Services",
        [],
        "Implementation",
        "Assemble fine-grained services into coarser composites that realize a business process.",
        ["Service Consumer", "Business Process Engineer"],
        ["Compose Web Services"],
        ["Composite Services as Business Process"],
    ),
    (
        "Discover Necessary Web Services",
        [],
        "Reuse Engineering",
        "Search registries for published services matching the required function and quality.",
        ["Service Consumer"],
        ["Search Web Services"],
        ["Executable Web Services"],
    ),
    (
        "Publish Web Services",
        [],
        "Deployment",
        "Host services and advertise them in a common registry.",
        ["Service Installer"],
        ["Import Web Services into the Common Web Service Repository"],
        ["Deployed and Published Services"],
    ),
    (
        "Perform Test in Large",
        [],
        "Deployment",
        "Exercise the orchestrated whole against acceptance criteria and contracted quality.",
        ["Orchestrator/Choreographer Tester"],
        ["Perform Orchestration/Choreography Testing"],
        ["Test Cases", "Results of Running Test Cases"],
    ),
    (
        "Monitor Operational Web Services",
        [],
        "Maintenance",
        "Watch live services against contracted metrics and flag degradation early.",
        ["Service Consumer", "Service Provider"],
        ["Monitor QoS of Web Services"],
        ["Statically Reports of QoS", "Service Metering", "Billing Report and Defect Report"],
    ),
    (
        "Compose Web Services Dynamically",
        ["Compose Web Service Dynamically"],
        "Maintenance",
        "Swap degraded services for freshly discovered ones at runtime.",
        ["Service Consumer"],
        ["Reconfigure Composite Web Services"],
        ["New Discovered Web Services"],
    ),
]

OPF_TASKS = [
    "Develop BOM",
    "Identify context",
    "Conduct market research",
    "Create white site",
    "Identify user requirements",
    "Define problem and establish mission and objectives",
    "Business Requirements Engineering",
    "Candidate Component Evaluation",
    "Candidate Component Solution Identification",
    "Process Needs Assessment",
    "Process Tailoring",
    "Process Mandating",
    "Requirements Identification",
    "Requirements Prototyping",
    "Requirements Specification",
    "Stakeholder Profiling",
    "Technology Analysis",
]

STAGES = [
    "Business Optimization Phase",
    "Initiation Phase",
    "Construction Phase",
    "Delivery Phase",
    "Usage Phase",
    "Retirement Phase",
]

# Sample decision values between the requirements engineering process and
# its baseline tasks; the one mandatory row drives the closure scenario.
BASELINE_DECISIONS = [
    ("Develop BOM", DeonticValue.OPTIONAL),
    ("Identify context", DeonticValue.RECOMMENDED),
    ("Conduct market research", DeonticValue.OPTIONAL),
    ("Create white site", DeonticValue.OPTIONAL),
    ("Identify user requirements", DeonticValue.MANDATORY),
    ("Define problem and establish mission and objectives", DeonticValue.OPTIONAL),
]

# before, after, provenance note
PRECEDENCE = [
    ("Identify Services", "Specify Details of Services", "rigorously specified later in the"),
    ("Identify Services", "Discover Necessary Web Services", "before performing the Discover Necessary"),
    ("Evaluate Environment Readiness", "Implement Necessary Wrappers", "Based on the work products of the Evaluate environment readiness task"),
    ("Implement and Test Necessary Services", "Publish Web Services", "takes tested Web Services"),
    ("Develop Governance Model for Current Iteration", "Monitor Operational Web Services", "against predefined metrics in Develop SOA Governance model and the SLA contract"),
    ("Specify Service Level Agreement", "Monitor Operational Web Services", "against predefined metrics in Develop SOA Governance model and the SLA contract"),
    ("Monitor Operational Web Services", "Compose Web Services Dynamically", "degraded Web Services have been detected and replaced"),
]


def build_repository() -> Repository:
    fragments: list[MethodFragment] = []
    cells: list[DeonticCell] = []

    def add(name, kind, *, aliases=(), description="", origin=Origin.SO_EXTENSION, owner=None):
        fragments.append(
            MethodFragment(
                id=slugify(name),
                name=name,
                kind=kind,
                description=description,
                origin=origin,
                owner_process=slugify(owner) if owner else None,
                aliases=tuple(aliases),
            )
        )

    for name, aliases, description in PROCESSES:
        add(name, FragmentKind.PROCESS, aliases=aliases, description=description)
    for name, aliases in OPF_PROCESSES:
        add(name, FragmentKind.PROCESS, aliases=aliases, description=STUB_NOTE, origin=Origin.OPF_BASELINE)
    for name, aliases in PRODUCERS:
        add(name, FragmentKind.PRODUCER, aliases=aliases, description=f"{name} role.")
    for name, aliases in TECHNIQUES:
        add(name, FragmentKind.TECHNIQUE, aliases=aliases, description=f"Technique: {name}.")
    for name, aliases in OPF_TECHNIQUES:
        add(name, FragmentKind.TECHNIQUE, aliases=aliases, description=STUB_NOTE, origin=Origin.OPF_BASELINE)
    for name, aliases in WORK_PRODUCTS:
        add(name, FragmentKind.WORK_PRODUCT, aliases=aliases, description=f"Work product: {name}.")
    for name, aliases, owner, description, producers, techniques, work_products in TASKS:
        add(name, FragmentKind.TASK, aliases=aliases, description=description, owner=owner)
        cells.append(DeonticCell(slugify(owner), slugify(name), DeonticValue.MANDATORY))
        for producer in producers:
            cells.append(DeonticCell(slugify(producer), slugify(name), DeonticValue.RECOMMENDED))
        for technique in techniques:
            cells.append(DeonticCell(slugify(name), slugify(technique), DeonticValue.RECOMMENDED))
        for work_product in work_products:
            cells.append(DeonticCell(slugify(name), slugify(work_product), DeonticValue.RECOMMENDED))
    for name in OPF_TASKS:
        add(name, FragmentKind.TASK, description=STUB_NOTE, origin=Origin.OPF_BASELINE)
    for name in STAGES:
        add(name, FragmentKind.STAGE, description=STUB_NOTE, origin=Origin.OPF_BASELINE)

    for task_name, value in BASELINE_DECISIONS:
        cells.append(DeonticCell(slugify("Requirements Engineering"), slugify(task_name), value))

    precedence = [
        PrecedenceConstraint(slugify(before), slugify(after), source)
        for before, after, source in PRECEDENCE
    ]

    return Repository.build(
        RepositoryMeta(name="so-method-fragments", version="1.0.0"),
        fragments,
        cells,
        precedence,
    )


def corpus_doc() -> dict:
    def sdm(name, *tasks):
        return {
            "name": name,
            "tasks": [{"name": t, "fragments": [slugify(f) for f in fs]} for t, fs in tasks],
        }

    return {
        "sdms": [
            sdm(
                "IBM SOAD",
                ("Service Identification", ["Identify Services"]),
                ("Service Classification", ["Classify Services"]),
                ("Service Modeling and Documentation", ["Specify Details of Services"]),
            ),
            sdm(
                "IBM SOMA 2008",
                ("Business Modeling and Transformation", ["Business Requirements Engineering"]),
                ("Solution Management", ["Project Management"]),
                ("Identification", ["Identify Services"]),
                ("Specification", ["Specify Details of Services"]),
                ("Realization", ["Candidate Component Evaluation", "Candidate Component Solution Identification"]),
                ("Implementation", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Deployment, Monitoring, and Management", ["Publish Web Services", "Monitor Operational Web Services", "Compose Web Services Dynamically"]),
            ),
            sdm(
                "CBDI-SAE Process",
                ("Manage", ["Evaluate Environment Readiness", "Develop Governance Model for Current Iteration"]),
                ("Consume", ["Business Requirements Engineering"]),
                ("Provide", ["Plan Transition", "Service-Oriented Architecture Engineering", "Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Enable", ["Publish Web Services", "Monitor Operational Web Services", "Compose Web Services Dynamically"]),
            ),
            sdm(
                "SOUP",
                ("Incept", ["Evaluate Environment Readiness", "Business Requirements Engineering"]),
                ("Define", ["Plan Transition", "Identify Services", "Project Management"]),
                ("Design", ["Specify Details of Services"]),
                ("Construct", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Deploy", ["Publish Web Services"]),
                ("Support", ["Monitor Operational Web Services"]),
            ),
            sdm(
                "MSOAM",
                ("Service-Oriented Analysis", ["Evaluate Environment Readiness", "Business Requirements Engineering"]),
                ("Service-Oriented Design", ["Identify Services", "Service-Oriented Architecture Engineering"]),
                ("Service Development", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Service Testing", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Service Deployment", ["Publish Web Services"]),
                ("Service Administration", ["Monitor Operational Web Services", "Compose Web Services Dynamically"]),
            ),
            sdm(
                "IBM RUP for SOA",
                ("Service Identification", ["Identify Services"]),
                ("Service Specification", ["Specify Details of Services"]),
                ("Service Realization", ["Candidate Component Evaluation", "Candidate Component Solution Identification"]),
            ),
            sdm(
                "SUN SOA RQ",
                ("Inception", ["Evaluate Environment Readiness", "Business Requirements Engineering"]),
                ("Elaboration", ["Evaluate Environment Readiness", "Service-Oriented Architecture Engineering", "Business Requirements Engineering"]),
                ("Construct", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Transition", ["Publish Web Services"]),
                ("Maintenance", ["Monitor Operational Web Services", "Compose Web Services Dynamically"]),
            ),
            sdm(
                "SOAF",
                ("Information Elicitation", ["Business Requirements Engineering"]),
                ("Service Identification", ["Identify Services"]),
                ("Service Definition", ["Specify Details of Services"]),
                ("Service Realization", ["Candidate Component Evaluation", "Candidate Component Solution Identification"]),
                ("Road Map and Planning", ["Develop Governance Model for Current Iteration", "Plan Transition"]),
            ),
            sdm(
                "Steve Jones' Service Architectures",
                ("Initiate", ["Plan Transition", "Project Management", "Business Requirements Engineering"]),
                ("Create Big Picture", ["Evaluate Environment Readiness"]),
                ("Create Architecture", ["Service-Oriented Architecture Engineering"]),
            ),
            sdm(
                "Papazoglou",
                ("Planning", ["Plan Transition", "Project Management"]),
                ("Analysis and Design", ["Evaluate Environment Readiness", "Identify Services", "Specify Details of Services"]),
                ("Construction and Testing", ["Implement and Test Necessary Services", "Implement Necessary Wrappers"]),
                ("Provisioning", ["Develop Necessary Composite Web Services", "Discover Necessary Web Services"]),
                ("Deployment", ["Publish Web Services"]),
                ("Execution and Monitoring", ["Monitor Operational Web Services", "Compose Web Services Dynamically"]),
            ),
            sdm(
                "SDM proposed by Chang and Kim",
                ("Identifying business processes", ["Evaluate Environment Readiness", "Business Requirements Engineering"]),
                ("Defining Unit services", ["Identify Services", "Specify Details of Services"]),
                ("Discovering Services", ["Discover Necessary Web Services"]),
                ("Developing Services", ["Publish Web Services"]),
                ("Composing Services", ["Develop Necessary Composite Web Services"]),
            ),
        ]
    }


def case1_doc() -> dict:
    def req(rid, title, explanation, tasks, techniques):
        return {
            "id": rid,
            "title": title,
            "explanation": explanation,
            "tasks": [slugify(t) for t in tasks],
            "techniques": [slugify(t) for t in techniques],
        }

    return {
        "name": "Residential Services System",
        "requirements": [
            req(
                "#R1",
                "Utilizing External Services",
                "Third-party payment services are consumed, so candidates must be found, contracted, and watched during use.",
                ["Specify Service Level Agreement", "Discover Necessary Web Services", "Monitor Operational Web Services"],
                ["Create SLA Contract", "Search Web Services", "Monitor QoS of Web Services"],
            ),
            req(
                "#R2",
                "Improving Business Process",
                "Current booking workflows are modeled and re-engineered wherever improvement is needed.",
                ["Process Needs Assessment", "Process Tailoring", "Process Mandating"],
                ["Existing Techniques"],
            ),
            req(
                "#R3",
                "Using Legacy Systems Services",
                "Deployed legacy systems are assessed for business logic worth exposing as services.",
                ["Evaluate Environment Readiness"],
                ["Create a Readiness Report"],
            ),
            req(
                "#R4",
                "Modernizing Legacy Systems",
                "Strategies for migrating the aging system and its databases are weighed and approved without stopping the business.",
                ["Plan Transition"],
                ["Make Transition Plan"],
            ),
            req(
                "#R5",
                "Conforming to Stated Quality of Services",
                "External services that fall short of their contract are replaced while the system runs.",
                ["Compose Web Services Dynamically", "Specify Service Level Agreement"],
                ["Reconfigure Composite Web Services", "Create SLA Contract"],
            ),
            req(
                "#R6",
                "Provide Residency as Service",
                "The booking and payment workflow is decomposed into services exposed to external consumers.",
                ["Identify Services", "Specify Details of Services"],
                ["Top-Down", "Bottom-Up", "Add Specific Details to Service"],
            ),
            req(
                "#R7",
                "Requirements-Based",
                "Requirements are formally elicited, documented, and validated by all stakeholders.",
                ["Requirements Identification", "Requirements Prototyping", "Requirements Specification", "Stakeholder Profiling", "Technology Analysis"],
                ["Existing Techniques"],
            ),
        ],
    }


def case2_doc() -> dict:
    def req(rid, title, explanation, tasks, techniques):
        return {
            "id": rid,
            "title": title,
            "explanation": explanation,
            "tasks": [slugify(t) for t in tasks],
            "techniques": [slugify(t) for t in techniques],
        }

    return {
        "name": "Driver Assistance System",
        "requirements": [
            req(
                "#R1",
                "Constraint on budget",
                "Beyond the embedded core, functionality comes from external services to keep cost down.",
                ["Discover Necessary Web Services", "Specify Service Level Agreement"],
                ["Search Web Services", "Create SLA Contract"],
            ),
            req(
                "#R2",
                "Incorporating minimum of developers",
                "Reusing published services keeps the development team small.",
                ["Discover Necessary Web Services"],
                ["Search Web Services"],
            ),
            req(
                "#R3",
                "User's preferences",
                "Driver preferences steer which car services get selected.",
                ["Discover Necessary Web Services"],
                ["Search Web Services"],
            ),
            req(
                "#R4",
                "Risk of developer skill",
                "Few developers know the service stack, so the team acts as a consumer.",
                ["Discover Necessary Web Services"],
                ["Search Web Services"],
            ),
            req(
                "#R5",
                "Implement and assemble hardware",
                "Low-level sensor, timer, converter, and driver code must be designed, implemented, and tested.",
                [],
                [],
            ),
            req(
                "#R6",
                "Hardware Validation",
                "Hardware programs need symbolic execution to confirm correctness.",
                [],
                [],
            ),
        ],
    }


def main() -> None:
    SEED_DIR.mkdir(parents=True, exist_ok=True)
    repo = build_repository()
    (SEED_DIR / "so-fragments.json").write_text(save_repository(repo), encoding="utf-8")
    for name, doc in [
        ("table19.json", corpus_doc()),
        ("case1-residential.json", case1_doc()),
        ("case2-das.json", case2_doc()),
    ]:
        (SEED_DIR / name).write_text(
            json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
    print(f"wrote seed files to {SEED_DIR}")


if __name__ == "__main__":
    main()
